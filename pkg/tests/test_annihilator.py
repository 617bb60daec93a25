import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import A2, A3, CYCLE3, KRONECKER, LOOP, fixture_rep, rep
from orbitclosure.annihilator import (
    AnnihilatorError,
    annihilator,
    arrow_reduce,
    evaluation_rank,
    is_admissible,
    is_zero_ideal,
)
from orbitclosure.linalg import Matrix, rank
from orbitclosure.quiver import Path, PathAlgebraElement, Quiver, is_acyclic
from orbitclosure.representation import is_nilpotent


def elem(q, *arrows, coeff=1):
    return PathAlgebraElement.from_path(Path.of(q, arrows), coeff)


def test_annihilator_a2_is_zero():
    ann = annihilator(fixture_rep("A2"))
    assert list(ann.elements()) == []
    assert is_zero_ideal(ann)
    assert is_admissible(ann)


def test_annihilator_jordan2(jordan2):
    ann = annihilator(jordan2)
    assert ann.truncation_degree == 2
    assert ann.graded_dim("1", "1", 0) == 0
    assert ann.graded_dim("1", "1", 1) == 0
    assert ann.graded[("1", "1", 2)] == [elem(LOOP, "g", "g")]
    assert is_admissible(ann)
    assert not is_zero_ideal(ann)


def test_annihilator_kronecker_diagonal():
    ann = annihilator(fixture_rep("KRON-11"))
    (rho,) = ann.graded[("1", "2", 1)]
    assert rho == elem(KRONECKER, "a") - elem(KRONECKER, "b")
    assert not is_admissible(ann)


def test_admissible_examples():
    assert not is_admissible(annihilator(fixture_rep("KRON-10")))


def test_zero_ideal_examples(a3rel):
    assert not is_zero_ideal(annihilator(a3rel))
    for n in (1, 2, 3):
        nil = rep(LOOP, (n,), {"g": [[1 if c == r + 1 else 0 for c in range(n)] for r in range(n)]})
        assert not is_zero_ideal(annihilator(nil))


def test_non_nilpotent_cyclic_rejected():
    with pytest.raises(AnnihilatorError):
        annihilator(fixture_rep("JORDAN1-invertible"))


def test_mixed_length_annihilator_is_seen():
    # a - c*b annihilates but neither graded piece does
    tri = fixture_rep("TRIANGLE")
    ann = annihilator(tri)
    assert all(not ann.graded[k] for k in ann.graded)
    assert not is_admissible(ann)


def test_arrow_reduce_identity_on_a2():
    v = fixture_rep("A2")
    reduced, red = arrow_reduce(v)
    assert red.is_identity()
    assert reduced == v


def test_arrow_reduce_kronecker_zero_arrow():
    reduced, red = arrow_reduce(fixture_rep("KRON-10"))
    assert [a.name for a in reduced.quiver.arrows] == ["a"]
    assert reduced["a"] == Matrix([[1]])
    assert red.arrow_map["b"].is_zero()


def test_arrow_reduce_kronecker_diagonal():
    reduced, red = arrow_reduce(fixture_rep("KRON-11"))
    assert [a.name for a in reduced.quiver.arrows] == ["a"]
    (step,) = red.steps
    assert step.deleted == "b"
    # new arrow basis: (a, b - a); the second one acts as zero and is dropped
    assert step.basis_change == Matrix([[1, -1], [0, 1]])
    assert rank(step.basis_change) == 2
    assert red.arrow_map["b"] == elem(reduced.quiver, "a")


def test_arrow_reduce_drops_empty_vertices():
    v = rep(A3, (1, 0, 1), {"a": [], "b": [[]]})
    reduced, red = arrow_reduce(v)
    assert red.removed_vertices == ("2",)
    assert reduced.quiver.vertices == ("1", "3")
    assert red.arrow_map["a"] is None


def _check_reduction(v):
    reduced, red = arrow_reduce(v)
    assert all(reduced.dim[i] > 0 for i in reduced.quiver.vertices)
    if red.complete:
        ann = annihilator(reduced)
        assert is_admissible(ann)
        for (i, j, ell), basis in ann.graded.items():
            if ell == 1:
                assert basis == []
    for a in v.quiver.arrows:
        expr = red.arrow_map[a.name]
        if expr is not None:
            assert reduced.evaluate(expr) == v[a.name]
    return reduced, red


def test_reduction_certificates_on_fixtures():
    for name in ("A2", "A2-zero", "KRON-00", "KRON-10", "KRON-11", "TRIANGLE", "CYC3-ab", "CYC3-ac", "CYC3-zero", "CYC3-211"):
        _check_reduction(fixture_rep(name))


def _random_rep(rng, q, max_d=2):
    d = {i: rng.randint(0, max_d) for i in q.vertices}
    mats = {a.name: [[rng.choice([-1, 0, 0, 1, 2]) for _ in range(d[a.source])] for _ in range(d[a.target])]
            for a in q.arrows}
    return rep(q, d, mats)


QUIVERS = [A2, A3, KRONECKER, CYCLE3,
           Quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "1", "3"), ("c", "3", "2"), ("d", "1", "2")])]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000))
def test_annihilator_invariants_random(seed):
    rng = random.Random(seed)
    q = rng.choice(QUIVERS)
    v = _random_rep(rng, q)
    if not is_acyclic(q) and not is_nilpotent(v):
        return
    ann = annihilator(v)
    for rho in ann.elements():
        assert v.evaluate(rho).is_zero()
    for basis in ann.joint.values():
        for rho in basis:
            assert v.evaluate(rho).is_zero()
    for (i, j, ell), count in ann.path_counts.items():
        assert ann.graded_dim(i, j, ell) + evaluation_rank(v, i, j, ell) == count
    if is_admissible(ann):
        for (i, j, ell), basis in ann.graded.items():
            if ell <= 1:
                assert basis == []
    _check_reduction(v)

