"""Ext^1(N, N) over path algebras and bound quiver algebras, orbit dimensions.

Self-extensions of N are written as block matrices ``[[N_a, f_a], [0, N_a]]``.
The tuple ``f = (f_a)`` is a cocycle when the block representation still
satisfies every relation; it splits when it is a coboundary
``delta(g)_a = g_t N_a - N_a g_s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .linalg import Matrix, kernel_basis, rank, solve
from .quiver import PathAlgebraElement
from .representation import Representation, hom_space

# arrow -> matrix of shape d_t x d_s
Cocycle = Mapping[str, Matrix]


class ExtError(ValueError):
    pass


@dataclass(frozen=True)
class ExtReport:
    dim_hom: int
    dim_coboundaries: int
    dim_cocycles: int
    dim_ext1: int
    relation_set_used: tuple[PathAlgebraElement, ...] = ()


def flatten_cocycle(n: Representation, f: Cocycle) -> tuple:
    out = []
    for a in n.quiver.arrows:
        m = f[a.name]
        if m.shape != n[a.name].shape:
            raise ExtError(f"cocycle block for {a.name} has shape {m.shape}, expected {n[a.name].shape}")
        out.extend(m.entries())
    return tuple(out)


def unflatten_cocycle(n: Representation, vec: Sequence) -> dict[str, Matrix]:
    out, k = {}, 0
    for a in n.quiver.arrows:
        r, c = n[a.name].shape
        out[a.name] = Matrix([vec[k + p * c : k + (p + 1) * c] for p in range(r)], n.field, cols=c)
        k += r * c
    return out


def _unit_cocycles(n: Representation):
    field = n.field
    for a in n.quiver.arrows:
        r, c = n[a.name].shape
        for p in range(r):
            for q in range(c):
                f = {b.name: Matrix.zeros(*n[b.name].shape, field) for b in n.quiver.arrows}
                f[a.name] = Matrix.unit(r, c, p, q, field)
                yield f


def coboundary(n: Representation, g: Mapping[str, Matrix]) -> dict[str, Matrix]:
    """delta(g)_a = g_t N_a - N_a g_s for a tuple of per-vertex endomorphisms g."""
    return {a.name: g[a.target] @ n[a.name] - n[a.name] @ g[a.source] for a in n.quiver.arrows}


def coboundary_matrix(n: Representation) -> Matrix:
    """Matrix of delta from flattened vertex endomorphisms to flattened cocycles."""
    field = n.field
    cols = []
    for i in n.quiver.vertices:
        d = n.dim[i]
        for p in range(d):
            for q in range(d):
                g = {v: Matrix.zeros(n.dim[v], n.dim[v], field) for v in n.quiver.vertices}
                g[i] = Matrix.unit(d, d, p, q, field)
                cols.append(flatten_cocycle(n, coboundary(n, g)))
    return Matrix.from_columns(cols, n.ambient_dim, field)


def relation_derivative(n: Representation, rho: PathAlgebraElement, f: Cocycle) -> Matrix:
    """First-order term of rho on the extension: sum over paths of N..f..N with one factor replaced."""
    field = n.field
    total = Matrix.zeros(n.dim[rho.target], n.dim[rho.source], field)
    for path, c in rho.terms.items():
        order = path.applied_order()
        for k in range(len(order)):
            m = Matrix.identity(n.dim[path.source], field)
            for idx, name in enumerate(order):
                m = (f[name] if idx == k else n[name]) @ m
            total = total + m.scale(c)
    return total


def _check_relations(n: Representation, relations: Sequence[PathAlgebraElement]):
    for rho in relations:
        if not n.evaluate(rho).is_zero():
            raise ExtError(f"relation {rho} does not vanish on the representation")


def cocycle_constraint_matrix(n: Representation, relations: Sequence[PathAlgebraElement]) -> Matrix:
    """Rows are the linear conditions on flattened f imposed by the relations."""
    field = n.field
    units = list(_unit_cocycles(n))
    rows = []
    for rho in relations:
        cols = [relation_derivative(n, rho, f).entries() for f in units]
        if cols and cols[0]:
            for r in range(len(cols[0])):
                rows.append([col[r] for col in cols])
    return Matrix(rows, field, cols=n.ambient_dim)


def cocycle_basis(n: Representation, relations: Sequence[PathAlgebraElement] = ()) -> list[dict[str, Matrix]]:
    _check_relations(n, relations)
    basis = kernel_basis(cocycle_constraint_matrix(n, relations))
    return [unflatten_cocycle(n, v) for v in basis]


def is_cocycle(n: Representation, f: Cocycle, relations: Sequence[PathAlgebraElement] = ()) -> bool:
    return all(relation_derivative(n, rho, f).is_zero() for rho in relations)


def ext1(n: Representation, relations: Sequence[PathAlgebraElement] = ()) -> ExtReport:
    relations = tuple(relations)
    _check_relations(n, relations)
    dim_hom = hom_space(n, n).dim
    dim_b = rank(coboundary_matrix(n))
    dim_z = n.ambient_dim - rank(cocycle_constraint_matrix(n, relations))
    return ExtReport(dim_hom, dim_b, dim_z, dim_z - dim_b, relations)


def extension_middle(n: Representation, f: Cocycle) -> Representation:
    """The representation with blocks [[N_a, f_a], [0, N_a]] on dimension vector 2d."""
    flatten_cocycle(n, f)
    field = n.field
    mats = {}
    for a in n.quiver.arrows:
        na = n[a.name]
        zero = Matrix.zeros(*na.shape, field)
        mats[a.name] = Matrix.block([[na, f[a.name]], [zero, na]])
    return Representation(n.quiver, {v: 2 * d for v, d in n.dim.items()}, mats, field)


def splits(n: Representation, f: Cocycle, relations: Sequence[PathAlgebraElement] = ()) -> bool:
    """True iff f is a coboundary, i.e. the extension it defines is trivial."""
    if not is_cocycle(n, f, relations):
        raise ExtError("not a cocycle for the given relations")
    target = Matrix.from_columns([flatten_cocycle(n, f)], n.ambient_dim, n.field)
    return solve(coboundary_matrix(n), target) is not None


def orbit_dim(n: Representation) -> int:
    return n.group_dim - hom_space(n, n).dim


def artin_voigt_codim(n: Representation) -> int:
    """Codimension of the orbit closure in rep_Q(d): dim Ext^1 over the path algebra."""
    return ext1(n, ()).dim_ext1
