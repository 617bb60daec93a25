"""Shared builders for the test suite."""

import itertools
from pathlib import Path

from orbitclosure.fields import GF, QQ
from orbitclosure.instance import read
from orbitclosure.linalg import Matrix
from orbitclosure.quiver import Quiver
from orbitclosure.representation import Representation

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"
F2 = GF(2)

A2 = Quiver(["1", "2"], [("a", "1", "2")])
A3 = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
KRONECKER = Quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])
LOOP = Quiver(["1"], [("g", "1", "1")])
CYCLE2 = Quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])
CYCLE3 = Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")])


def rep(quiver, dim, mats, field=QQ):
    """Build a representation from nested lists; dim may be a tuple in vertex order."""
    if not isinstance(dim, dict):
        dim = dict(zip(quiver.vertices, dim))
    matrices = {}
    for a in quiver.arrows:
        m = mats[a.name]
        matrices[a.name] = m if isinstance(m, Matrix) else Matrix(m, field, cols=dim[a.source])
    return Representation(quiver, dim, matrices, field)


def fixture(name):
    return read(FIXTURES / f"{name}.rep")


def fixture_rep(name):
    return fixture(name).rep


def all_fixture_names():
    return sorted(p.stem for p in FIXTURES.glob("*.rep"))


def all_reps_over(quiver, dim, field):
    """Every representation of the quiver on dim over a finite field."""
    if not isinstance(dim, dict):
        dim = dict(zip(quiver.vertices, dim))
    shapes = [(a.name, dim[a.target], dim[a.source]) for a in quiver.arrows]
    sizes = [r * c for _, r, c in shapes]
    elems = field.elements()
    for flat in itertools.product(elems, repeat=sum(sizes)):
        mats, k = {}, 0
        for (name, r, c), size in zip(shapes, sizes):
            chunk = flat[k : k + size]
            mats[name] = Matrix([chunk[p * c : (p + 1) * c] for p in range(r)], field, cols=c)
            k += size
        yield Representation(quiver, dim, mats, field)


def dim_vectors(quiver, max_total):
    """All dimension vectors with total dimension 1..max_total."""
    n = len(quiver.vertices)
    for d in itertools.product(range(max_total + 1), repeat=n):
        if 0 < sum(d) <= max_total:
            yield dict(zip(quiver.vertices, d))
