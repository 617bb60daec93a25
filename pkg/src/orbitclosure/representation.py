"""Representations of quivers over exact fields.

A :class:`Representation` fixes a dimension vector and stores one matrix of
shape ``d[t(a)] x d[s(a)]`` per arrow.  Vectors of the total space
``V = sum V_i`` are flat tuples with the vertex blocks in vertex order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .fields import Field, QQ
from .linalg import Matrix, ShapeError, is_nilpotent_matrix, kernel_basis, rref_rows, span_basis, vector_in_span
from .poly import Poly, poly_det
from .quiver import Path, PathAlgebraElement, Quiver, QuiverError, check_dim_vector, enumerate_paths


class RepresentationError(ValueError):
    pass


# vertex -> invertible d_i x d_i matrix
GroupElement = Mapping[str, Matrix]


class Representation:
    def __init__(self, quiver: Quiver, dim: Mapping[str, int], matrices: Mapping[str, object], field: Field = QQ):
        self.quiver = quiver
        self.dim = check_dim_vector(quiver, dim)
        self.field = field
        mats = {}
        for a in quiver.arrows:
            if a.name not in matrices:
                raise RepresentationError(f"no matrix given for arrow {a.name}")
            m = matrices[a.name]
            shape = (self.dim[a.target], self.dim[a.source])
            if not isinstance(m, Matrix):
                m = Matrix(m, field, cols=shape[1])
            elif m.field != field:
                raise RepresentationError(f"matrix for {a.name} lives over {m.field}, expected {field}")
            if m.shape != shape:
                raise RepresentationError(f"matrix for {a.name} has shape {m.shape}, expected {shape}")
            mats[a.name] = m
        extra = set(matrices) - set(mats)
        if extra:
            raise RepresentationError(f"matrices given for unknown arrows {sorted(extra)}")
        self.matrices = mats

    @classmethod
    def zero(cls, quiver: Quiver, dim: Mapping[str, int], field: Field = QQ) -> "Representation":
        return cls(
            quiver,
            dim,
            {a.name: Matrix.zeros(dim[a.target], dim[a.source], field) for a in quiver.arrows},
            field,
        )

    @classmethod
    def simple(cls, quiver: Quiver, vertex: str, field: Field = QQ) -> "Representation":
        return cls.zero(quiver, {v: int(v == vertex) for v in quiver.vertices}, field)

    def __getitem__(self, arrow: str) -> Matrix:
        return self.matrices[arrow]

    @property
    def total_dim(self) -> int:
        return sum(self.dim.values())

    @property
    def ambient_dim(self) -> int:
        """Dimension of the representation space rep_Q(d)."""
        return sum(self.dim[a.source] * self.dim[a.target] for a in self.quiver.arrows)

    @property
    def group_dim(self) -> int:
        return sum(n * n for n in self.dim.values())

    def offsets(self) -> dict[str, int]:
        out, k = {}, 0
        for v in self.quiver.vertices:
            out[v] = k
            k += self.dim[v]
        return out

    def replace(self, matrices: Mapping[str, Matrix]) -> "Representation":
        return Representation(self.quiver, self.dim, matrices, self.field)

    def __eq__(self, other):
        return (
            isinstance(other, Representation)
            and self.quiver == other.quiver
            and self.dim == other.dim
            and self.field == other.field
            and self.matrices == other.matrices
        )

    def __repr__(self):
        return f"Representation(dim={self.dim}, matrices={self.matrices})"

    def evaluate_path(self, path: Path) -> Matrix:
        m = Matrix.identity(self.dim[path.source], self.field)
        for name in path.applied_order():
            m = self.matrices[name] @ m
        return m

    def evaluate(self, rho: PathAlgebraElement) -> Matrix:
        """The matrix V_rho : V_i -> V_j."""
        self.quiver.check_vertex(rho.source)
        self.quiver.check_vertex(rho.target)
        total = Matrix.zeros(self.dim[rho.target], self.dim[rho.source], self.field)
        for p, c in rho.terms.items():
            for name in p.arrows:
                if not self.quiver.has_arrow(name):
                    raise RepresentationError(f"element uses arrow {name} outside the quiver")
            total = total + self.evaluate_path(p).scale(c)
        return total


def _same_setting(v: Representation, w: Representation):
    if v.quiver != w.quiver:
        raise RepresentationError("representations of different quivers")
    if v.field != w.field:
        raise RepresentationError("representations over different fields")


def act(g: GroupElement, v: Representation) -> Representation:
    """The base change g * V = (g_t V_a g_s^-1)."""
    inv = {}
    for i in v.quiver.vertices:
        gi = g[i]
        if gi.shape != (v.dim[i], v.dim[i]):
            raise ShapeError(f"group block at {i} has shape {gi.shape}")
        try:
            inv[i] = gi.inverse()
        except ZeroDivisionError:
            raise RepresentationError(f"group block at vertex {i} is singular") from None
    mats = {}
    for a in v.quiver.arrows:
        mats[a.name] = g[a.target] @ v[a.name] @ inv[a.source]
    return v.replace(mats)


def group_product(g: GroupElement, h: GroupElement) -> dict[str, Matrix]:
    return {i: g[i] @ h[i] for i in g}


def identity_element(v: Representation) -> dict[str, Matrix]:
    return {i: Matrix.identity(v.dim[i], v.field) for i in v.quiver.vertices}


def random_group_element(v: Representation, rng: random.Random, bound: int = 3) -> dict[str, Matrix]:
    g = {}
    for i in v.quiver.vertices:
        n = v.dim[i]
        while True:
            m = Matrix([[v.field.random_element(rng, bound) for _ in range(n)] for _ in range(n)], v.field, cols=n)
            if n == 0 or m.det():
                break
        g[i] = m
    return g


@dataclass(frozen=True)
class HomSpace:
    dim: int
    # each basis element maps vertex -> matrix W_i x V_i
    basis: tuple[dict, ...]


def _intertwiner_system(v: Representation, w: Representation) -> tuple[Matrix, list[tuple[str, int, int]]]:
    """Coefficient matrix of f_t V_a - W_a f_s = 0 in the unknown entries of (f_i)."""
    q = v.quiver
    unknowns = [(i, p, r) for i in q.vertices for p in range(w.dim[i]) for r in range(v.dim[i])]
    col = {u: k for k, u in enumerate(unknowns)}
    field = v.field
    rows = []
    for a in q.arrows:
        s, t = a.source, a.target
        va, wa = v[a.name], w[a.name]
        for p in range(w.dim[t]):
            for c in range(v.dim[s]):
                row = [field.zero] * len(unknowns)
                # (f_t V_a)[p][c] = sum_r f_t[p][r] V_a[r][c]
                for r in range(v.dim[t]):
                    x = va[r, c]
                    if x:
                        row[col[(t, p, r)]] += x
                # (W_a f_s)[p][c] = sum_r W_a[p][r] f_s[r][c]
                for r in range(w.dim[s]):
                    x = wa[p, r]
                    if x:
                        row[col[(s, r, c)]] -= x
                rows.append(row)
    return Matrix(rows, field, cols=len(unknowns)), unknowns


def _unflatten(vec: Sequence, v: Representation, w: Representation) -> dict[str, Matrix]:
    out, k = {}, 0
    for i in v.quiver.vertices:
        rows, cols = w.dim[i], v.dim[i]
        out[i] = Matrix([vec[k + p * cols : k + (p + 1) * cols] for p in range(rows)], v.field, cols=cols)
        k += rows * cols
    return out


def hom_space(v: Representation, w: Representation) -> HomSpace:
    """Morphisms V -> W as tuples of per-vertex matrices, with an echelon basis."""
    _same_setting(v, w)
    system, unknowns = _intertwiner_system(v, w)
    basis = kernel_basis(system)
    return HomSpace(len(basis), tuple(_unflatten(b, v, w) for b in basis))


def is_morphism(f: Mapping[str, Matrix], v: Representation, w: Representation) -> bool:
    return all((f[a.target] @ v[a.name]) == (w[a.name] @ f[a.source]) for a in v.quiver.arrows)


def are_isomorphic(v: Representation, w: Representation, seed: int = 0) -> bool:
    """Decide V = W over the algebraic closure of the ground field.

    An isomorphism exists iff a generic combination of a Hom(V, W) basis is
    invertible, i.e. iff the determinant of each vertex block is a nonzero
    polynomial in the combination coefficients.  A few seeded evaluations
    are tried first; a nonzero value is already a proof.  Otherwise the
    determinants are expanded symbolically.
    """
    _same_setting(v, w)
    if v.dim != w.dim:
        return False
    hom = hom_space(v, w)
    vertices = [i for i in v.quiver.vertices if v.dim[i] > 0]
    if not vertices:
        return True
    if hom.dim == 0:
        return False
    rng = random.Random(seed)
    field = v.field
    for _ in range(4):
        coeffs = [field.random_element(rng, 50) for _ in range(hom.dim)]
        ok = True
        for i in vertices:
            m = Matrix.zeros(v.dim[i], v.dim[i], field)
            for c, f in zip(coeffs, hom.basis):
                m = m + f[i].scale(c)
            if not m.det():
                ok = False
                break
        if ok:
            return True
    names = [f"c{k}" for k in range(hom.dim)]
    xs = Poly.gens(names, field)
    for i in vertices:
        n = v.dim[i]
        grid = [[sum((f[i][r, c] * x for f, x in zip(hom.basis, xs) if f[i][r, c]), Poly.zero(names, field))
                 for c in range(n)] for r in range(n)]
        if poly_det(grid, names, field).is_zero():
            return False
    return True


def is_nilpotent(v: Representation) -> bool:
    """Every path of length D = total dimension evaluates to zero.

    Computed by a dynamic program: reach[j] holds the stacked images of all
    length-l paths ending at j, kept as a row-reduced spanning set.
    """
    q = v.quiver
    big_d = v.total_dim
    if big_d == 0:
        return True
    # for each start vertex i, track span of images of paths i -> j as column spaces
    for i in q.vertices:
        if v.dim[i] == 0:
            continue
        reach = {j: [] for j in q.vertices}
        reach[i] = [tuple(r) for r in Matrix.identity(v.dim[i], v.field).transpose()]
        # reach[j]: list of row vectors spanning span{ columns of V_p : p path i->j of current length }
        for _ in range(big_d):
            nxt: dict[str, list] = {j: [] for j in q.vertices}
            for a in q.arrows:
                src = reach[a.source]
                if not src:
                    continue
                m = v[a.name]
                for vec in src:
                    img = tuple(sum((m[r, c] * vec[c] for c in range(m.cols)), v.field.zero) for r in range(m.rows))
                    if any(img):
                        nxt[a.target].append(img)
            reach = {j: span_basis(vs, v.dim[j], v.field) for j, vs in nxt.items()}
            if not any(reach.values()):
                break
        if any(reach.values()):
            return False
    return True


# families of subspaces: vertex -> list of basis vectors (RREF rows)
SubspaceFamily = dict


def _image(m: Matrix, vec: Sequence, field: Field) -> tuple:
    return tuple(sum((m[r, c] * vec[c] for c in range(m.cols) if vec[c]), field.zero) for r in range(m.rows))


def radical(v: Representation) -> SubspaceFamily:
    """Sum of the images of all arrows (defined here for nilpotent V only)."""
    if not is_nilpotent(v):
        raise RepresentationError("radical() is only implemented for nilpotent representations")
    out = {}
    for j in v.quiver.vertices:
        vecs = []
        for a in v.quiver.arrows:
            if a.target == j:
                vecs.extend(v[a.name].column_tuples())
        out[j] = span_basis(vecs, v.dim[j], v.field)
    return out


def split_vector(v: Representation, w: Sequence) -> dict[str, tuple]:
    if len(w) != v.total_dim:
        raise RepresentationError("vector length does not match the total dimension")
    offs = v.offsets()
    return {i: tuple(v.field(x) for x in w[offs[i] : offs[i] + v.dim[i]]) for i in v.quiver.vertices}


def subrep_generated(v: Representation, w: Sequence) -> SubspaceFamily:
    """Smallest subrepresentation containing the vertex components of ``w``."""
    parts = split_vector(v, w)
    fam = {i: span_basis([parts[i]] if any(parts[i]) else [], v.dim[i], v.field) for i in v.quiver.vertices}
    changed = True
    while changed:
        changed = False
        for a in v.quiver.arrows:
            for vec in fam[a.source]:
                img = _image(v[a.name], vec, v.field)
                if any(img) and not vector_in_span(img, fam[a.target], v.field):
                    fam[a.target] = span_basis(fam[a.target] + [img], v.dim[a.target], v.field)
                    changed = True
    return fam


def family_dim(fam: SubspaceFamily) -> int:
    return sum(len(b) for b in fam.values())


@dataclass(frozen=True)
class FlagVector:
    vertex: str
    vector: tuple


def composition_flag(v: Representation) -> list[FlagVector]:
    """Basis e_1..e_D, each at one vertex, whose prefixes span subrepresentations.

    At every step the next vector is a socle vector of V / (current prefix):
    the smallest vertex wins, then the first echelon basis vector of the
    candidate space that is not already in the prefix.
    """
    if not is_nilpotent(v):
        raise RepresentationError("composition_flag needs a nilpotent representation")
    flag = _greedy_flag(v)
    if flag is None:
        raise RepresentationError("no socle vector found; representation is not nilpotent")
    return flag


def _greedy_flag(v: Representation) -> Optional[list[FlagVector]]:
    field = v.field
    q = v.quiver
    prefix = {i: [] for i in q.vertices}
    flag: list[FlagVector] = []
    for _ in range(v.total_dim):
        chosen = None
        for i in q.vertices:
            if len(prefix[i]) == v.dim[i]:
                continue
            for vec in _socle_preimage(v, i, prefix):
                if not vector_in_span(vec, prefix[i], field):
                    chosen = FlagVector(i, vec)
                    break
            if chosen:
                break
        if chosen is None:
            return None
        flag.append(chosen)
        prefix[chosen.vertex] = span_basis(prefix[chosen.vertex] + [chosen.vector], v.dim[chosen.vertex], field)
    return flag


def has_composition_series(v: Representation) -> bool:
    """A flag with simple subquotients exists (checked without the nilpotency shortcut)."""
    return _greedy_flag(v) is not None


def cycles_nilpotent(v: Representation) -> bool:
    """Every closed path of length 1..D evaluates to a nilpotent matrix."""
    big_d = v.total_dim
    for i in v.quiver.vertices:
        if v.dim[i] == 0:
            continue
        for path in enumerate_paths(v.quiver, i, i, big_d):
            if path.length and not is_nilpotent_matrix(v.evaluate_path(path)):
                return False
    return True


def _socle_preimage(v: Representation, i: str, prefix: Mapping[str, list]) -> list[tuple]:
    """RREF basis of {x in V_i : V_a x lies in prefix[t(a)] for all arrows a out of i}."""
    field = v.field
    n = v.dim[i]
    rows = []
    for a in v.quiver.arrows_from(i):
        target_basis = prefix[a.target]
        m = v[a.name]
        # project onto a complement of the prefix: quotient map via annihilating functionals
        comp = kernel_basis(Matrix(target_basis, field, cols=v.dim[a.target])) if target_basis else [
            tuple(field.one if r == c else field.zero for c in range(v.dim[a.target])) for r in range(v.dim[a.target])
        ]
        for phi in comp:
            rows.append([sum((phi[r] * m[r, c] for r in range(m.rows)), field.zero) for c in range(n)])
    if not rows:
        return [tuple(field.one if r == c else field.zero for c in range(n)) for r in range(n)]
    return kernel_basis(Matrix(rows, field, cols=n))


def is_flag_valid(v: Representation, flag: Sequence[FlagVector]) -> bool:
    """Every prefix spans a subrepresentation and the vectors form a basis."""
    field = v.field
    prefix = {i: [] for i in v.quiver.vertices}
    for fv in flag:
        if vector_in_span(fv.vector, prefix[fv.vertex], field):
            return False
        prefix[fv.vertex] = span_basis(prefix[fv.vertex] + [fv.vector], v.dim[fv.vertex], field)
        for a in v.quiver.arrows:
            for vec in prefix[a.source]:
                if not vector_in_span(_image(v[a.name], vec, field), prefix[a.target], field):
                    return False
    return all(len(prefix[i]) == v.dim[i] for i in v.quiver.vertices)


def direct_sum(v: Representation, w: Representation) -> Representation:
    _same_setting(v, w)
    q = v.quiver
    dim = {i: v.dim[i] + w.dim[i] for i in q.vertices}
    mats = {}
    for a in q.arrows:
        s, t = a.source, a.target
        top = v[a.name].hstack(Matrix.zeros(v.dim[t], w.dim[s], v.field))
        bottom = Matrix.zeros(w.dim[t], v.dim[s], v.field).hstack(w[a.name])
        mats[a.name] = top.vstack(bottom)
    return Representation(q, dim, mats, v.field)


def flag_matrices(v: Representation, flag: Sequence[FlagVector]) -> dict[str, Matrix]:
    """Per-vertex change of basis whose columns are the flag vectors at that vertex, in flag order."""
    cols = {i: [] for i in v.quiver.vertices}
    for fv in flag:
        cols[fv.vertex].append(fv.vector)
    return {i: Matrix.from_columns(cols[i], v.dim[i], v.field) for i in v.quiver.vertices}
