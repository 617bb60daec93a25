"""Annihilator ideals of representations, admissibility, and arrow reduction.

All ideal computations are truncated at path length ``L``: the longest path
length for an acyclic quiver, and the total dimension ``D`` otherwise (for a
nilpotent representation every path of length >= D acts as zero, so nothing
is lost).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .linalg import Matrix, kernel_basis, rref_rows
from .quiver import (
    Path,
    PathAlgebraElement,
    Quiver,
    enumerate_paths,
    is_acyclic,
    longest_path_length,
)
from .representation import Representation, is_nilpotent


class AnnihilatorError(ValueError):
    pass


@dataclass
class AnnihilatorBasis:
    quiver: Quiver
    truncation_degree: int
    nilpotent: bool
    acyclic: bool
    # (i, j, length) -> echelon basis of the length-homogeneous kernel
    graded: dict = dc_field(default_factory=dict)
    # (i, j, length) -> number of paths of that length
    path_counts: dict = dc_field(default_factory=dict)
    # (i, j) -> echelon basis of the kernel of evaluation on all paths of length <= L
    joint: dict = dc_field(default_factory=dict)

    def elements(self):
        for key in sorted(self.graded, key=self._sort):
            yield from self.graded[key]

    def _sort(self, key):
        i, j, ell = key
        return (self.quiver.vertex_index(i), self.quiver.vertex_index(j), ell)

    def graded_dim(self, i: str, j: str, length: int) -> int:
        return len(self.graded.get((i, j, length), []))


def truncation_degree(n: Representation) -> int:
    if is_acyclic(n.quiver):
        return longest_path_length(n.quiver)
    return n.total_dim


def evaluation_matrix(n: Representation, paths: list[Path], i: str, j: str) -> Matrix:
    """Columns are the flattened matrices N_p for the given paths i -> j."""
    rows = n.dim[j] * n.dim[i]
    cols = [n.evaluate_path(p).entries() for p in paths]
    return Matrix.from_columns(cols, rows, n.field) if rows else Matrix.zeros(0, len(paths), n.field)


def _kernel_elements(n: Representation, paths: list[Path], i: str, j: str) -> list[PathAlgebraElement]:
    if not paths:
        return []
    basis = kernel_basis(evaluation_matrix(n, paths, i, j))
    return [PathAlgebraElement(i, j, dict(zip(paths, vec)), n.field) for vec in basis]


def annihilator(n: Representation) -> AnnihilatorBasis:
    q = n.quiver
    acyclic = is_acyclic(q)
    nilpotent = acyclic or is_nilpotent(n)
    if not nilpotent:
        raise AnnihilatorError("annihilator of a non-nilpotent representation of a cyclic quiver is not supported")
    top = truncation_degree(n)
    ann = AnnihilatorBasis(q, top, nilpotent, acyclic)
    for i in q.vertices:
        for j in q.vertices:
            paths = enumerate_paths(q, i, j, top)
            by_len: dict[int, list[Path]] = {}
            for p in paths:
                by_len.setdefault(p.length, []).append(p)
            for ell in range(top + 1):
                ps = by_len.get(ell, [])
                ann.path_counts[(i, j, ell)] = len(ps)
                ann.graded[(i, j, ell)] = _kernel_elements(n, ps, i, j)
            ann.joint[(i, j)] = _kernel_elements(n, paths, i, j)
    return ann


def is_admissible(a: AnnihilatorBasis) -> bool:
    """Lower bound: N is nilpotent.  Upper bound: no annihilating element has a part of length 0 or 1."""
    if not a.nilpotent:
        return False
    for elems in a.joint.values():
        for rho in elems:
            if rho.lengths() & {0, 1}:
                return False
    return True


def is_zero_ideal(a: AnnihilatorBasis) -> bool:
    """Ann(N) = 0.  Never true on a quiver with oriented cycles (long cycles annihilate)."""
    if not a.acyclic:
        return False
    return not any(a.joint.values())


@dataclass(frozen=True)
class ReductionStep:
    pair: tuple[str, str]
    deleted: str
    relation: PathAlgebraElement
    # new basis of the arrow space R_ij (columns: survivors, then the relation's arrow part)
    # in terms of the old arrows; only set when the relation is purely linear in arrows
    basis_change: Optional[Matrix] = None
    arrows: tuple[str, ...] = ()


@dataclass
class ArrowReduction:
    original: Quiver
    reduced: Quiver
    removed_vertices: tuple[str, ...]
    # original arrow -> element of the reduced path algebra acting like it; None if it touches a removed vertex
    arrow_map: dict
    steps: list
    complete: bool

    def is_identity(self) -> bool:
        return not self.steps and not self.removed_vertices


def _restrict(n: Representation, q: Quiver) -> Representation:
    return Representation(q, {v: n.dim[v] for v in q.vertices}, {a.name: n[a.name] for a in q.arrows}, n.field)


def _find_relation(n: Representation, top: int, i: str, j: str):
    """An annihilating element i -> j whose echelon pivot is an arrow not occurring in its other terms.

    Returns (element, pivot arrow, blocked); ``blocked`` reports that elements
    with a nonzero arrow part exist but none can be used.
    """
    q = n.quiver
    arrows = q.arrows_between(i, j)
    if not arrows:
        return None, None, False
    # arrows last-declared first, so pivots land on the last arrow of each relation
    cols = [Path(i, j, (a.name,)) for a in reversed(arrows)]
    rest = [p for p in enumerate_paths(q, i, j, top) if p.length != 1]
    cols += rest
    basis = kernel_basis(evaluation_matrix(n, cols, i, j))
    blocked = False
    for vec in basis:
        piv = next(k for k, x in enumerate(vec) if x)
        if piv >= len(arrows):
            continue
        pivot = cols[piv].arrows[0]
        rho = PathAlgebraElement(i, j, dict(zip(cols, vec)), n.field)
        if any(pivot in p.arrows for p in rho.terms if p.length > 1):
            blocked = True
            continue
        return rho, pivot, False
    return None, None, blocked


def arrow_reduce(n: Representation) -> tuple[Representation, ArrowReduction]:
    """Remove zero-dimensional vertices and every arrow that is a combination of other paths on N.

    Arrow spaces between each vertex pair are re-based (a change of arrows that
    fixes vertices and commutes with the base-change group) so that each
    annihilating element ``a - (other arrows) - (longer paths)`` becomes a
    single arrow acting as zero, which is then dropped.
    """
    original = n.quiver
    field = n.field
    arrow_map: dict = {
        a.name: PathAlgebraElement.from_path(Path(a.source, a.target, (a.name,)), 1, field) for a in original.arrows
    }
    removed = tuple(v for v in original.vertices if n.dim[v] == 0)
    if removed:
        q = original.subquiver(vertices=[v for v in original.vertices if n.dim[v] > 0])
        for a in original.arrows:
            if not q.has_arrow(a.name):
                arrow_map[a.name] = None
        cur = _restrict(n, q)
    else:
        cur = n
    top = truncation_degree(cur)
    steps = []
    complete = True
    while True:
        found = pivot = None
        blocked_any = False
        for i in cur.quiver.vertices:
            for j in cur.quiver.vertices:
                rho, piv, blocked = _find_relation(cur, top, i, j)
                blocked_any = blocked_any or blocked
                if rho is not None:
                    found, pivot = rho, piv
                    break
            if found is not None:
                break
        if found is None:
            complete = not blocked_any
            break
        q = cur.quiver
        replacement = -(found - PathAlgebraElement.from_path(Path(found.source, found.target, (pivot,)), 1, field))
        for name, expr in arrow_map.items():
            if expr is not None:
                arrow_map[name] = expr.substitute(q, pivot, replacement)
        steps.append(_make_step(q, found, pivot))
        cur = _restrict(cur, q.subquiver(arrows=[a.name for a in q.arrows if a.name != pivot]))
    return cur, ArrowReduction(original, cur.quiver, removed, arrow_map, steps, complete)


def _make_step(q: Quiver, rho: PathAlgebraElement, pivot: str) -> ReductionStep:
    i, j = rho.source, rho.target
    arrows = tuple(a.name for a in q.arrows_between(i, j))
    if rho.lengths() != {1}:
        return ReductionStep((i, j), pivot, rho, None, arrows)
    field = rho.field
    survivors = [a for a in arrows if a != pivot]
    columns = []
    for a in survivors:
        columns.append([field.one if b == a else field.zero for b in arrows])
    columns.append([rho.terms.get(Path(i, j, (b,)), field.zero) for b in arrows])
    return ReductionStep((i, j), pivot, rho, Matrix.from_columns(columns, len(arrows), field), arrows)


def evaluation_rank(n: Representation, i: str, j: str, length: int) -> int:
    """Rank of the evaluation map on paths of one length (for dimension-count tests)."""
    paths = [p for p in enumerate_paths(n.quiver, i, j, length) if p.length == length]
    if not paths:
        return 0
    m = evaluation_matrix(n, paths, i, j)
    return len(rref_rows(m.tolist(), m.cols, n.field)[1])
