"""Independent geometric check of the verdict at desk scale.

The vanishing ideal of an orbit closure is obtained by elimination from the
graph of the action map::

    X_a * g_s(a) - g_t(a) * N_a = 0   (all arrows, entrywise)
    T * prod_i det(g_i) - 1 = 0

Eliminating ``T`` and the group entries leaves the ideal of the Zariski
closure of {g * N}.  The source variety is irreducible, so the result is
prime and the Jacobian criterion applies to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .fields import GF, Field, QQ
from .groebner import DEFAULT_BUDGET, PolyIdeal, ResourceBoundExceeded, buchberger, eliminate
from .linalg import Matrix, kernel_basis, rank
from .poly import Poly, block_order, poly_det
from .representation import Representation

DEFAULT_MAX_VARS = 12


class OracleError(ValueError):
    pass


def arrow_variables(n: Representation) -> list[tuple[str, int, int]]:
    """(arrow, row, col) triples, 1-based, in arrow order then row-major."""
    out = []
    for a in n.quiver.arrows:
        r, c = n[a.name].shape
        out.extend((a.name, p + 1, q + 1) for p in range(r) for q in range(c))
    return out


def variable_name(arrow: str, p: int, q: int) -> str:
    return f"X_{arrow}_{p}_{q}"


def arrow_variable_names(n: Representation) -> tuple[str, ...]:
    return tuple(variable_name(*v) for v in arrow_variables(n))


def oracle_variable_count(n: Representation) -> int:
    return n.ambient_dim + n.group_dim + 1


def orbit_closure_ideal(
    n: Representation,
    budget: int = DEFAULT_BUDGET,
    max_vars: int = DEFAULT_MAX_VARS,
    inner_order: str = "lex",
) -> PolyIdeal:
    """Vanishing ideal of the orbit closure, in the variables X_a_p_q."""
    count = oracle_variable_count(n)
    if count > max_vars:
        raise ResourceBoundExceeded(f"oracle needs {count} variables, bound is {max_vars}")
    field = n.field
    q = n.quiver
    group = [(i, p, r) for i in q.vertices for p in range(n.dim[i]) for r in range(n.dim[i])]
    gnames = ["T"] + [f"g_{i}_{p + 1}_{r + 1}" for i, p, r in group]
    xnames = list(arrow_variable_names(n))
    names = tuple(gnames + xnames)
    var = {v: Poly.var(v, names, field) for v in names}

    def g(i, p, r):
        return var[f"g_{i}_{p + 1}_{r + 1}"]

    def x(a, p, r):
        return var[variable_name(a, p + 1, r + 1)]

    zero = Poly.zero(names, field)
    gens = []
    for a in q.arrows:
        s, t = a.source, a.target
        na = n[a.name]
        for p in range(n.dim[t]):
            for c in range(n.dim[s]):
                lhs = sum((x(a.name, p, r) * g(s, r, c) for r in range(n.dim[s])), zero)
                rhs = sum((g(t, p, r) * na[r, c] for r in range(n.dim[t]) if na[r, c]), zero)
                gens.append(lhs - rhs)
    det = Poly.constant(1, names, field)
    for i in q.vertices:
        d = n.dim[i]
        if d:
            det = det * poly_det([[g(i, p, r) for r in range(d)] for p in range(d)], names, field)
    gens.append(var["T"] * det - 1)
    order = block_order(len(gnames), inner_order)
    ideal = PolyIdeal(gens, names, order, field, prime=True)
    result = eliminate(ideal, gnames, budget)
    result.prime = True
    return result


def jacobian_at(ideal: PolyIdeal, point: Sequence) -> Matrix:
    field = ideal.field
    nv = len(ideal.variables)
    rows = [[g.diff(k).evaluate(point) for k in range(nv)] for g in ideal.generators]
    return Matrix(rows, field, cols=nv)


def _check_point(ideal: PolyIdeal, point: Sequence):
    if len(point) != len(ideal.variables):
        raise OracleError("point has the wrong number of coordinates")
    for gen in ideal.generators:
        if gen.evaluate(point):
            raise OracleError("point does not lie on the variety")


def smooth_at(ideal: PolyIdeal, point: Sequence, expected_dim: int, assume_prime: bool = False) -> bool:
    """Jacobian criterion: rank of the Jacobian at the point equals the codimension."""
    if not (ideal.prime or assume_prime):
        raise OracleError("smooth_at needs a prime ideal; pass assume_prime=True to vouch for it")
    _check_point(ideal, point)
    codim = len(ideal.variables) - expected_dim
    return rank(jacobian_at(ideal, point)) == codim


def jacobian_rank_at_zero(ideal: PolyIdeal) -> int:
    return rank(jacobian_at(ideal, [ideal.field.zero] * len(ideal.variables)))


def tangent_space_at_zero(ideal: PolyIdeal) -> tuple[int, list[tuple]]:
    """Kernel of the Jacobian at the origin, as vectors over the ideal's variables."""
    zero = [ideal.field.zero] * len(ideal.variables)
    _check_point(ideal, zero)
    basis = kernel_basis(jacobian_at(ideal, zero))
    return len(basis), basis


def vector_to_cocycle(n: Representation, vec: Sequence) -> dict[str, Matrix]:
    """Read a vector over the X_a_p_q variables as a tuple of arrow matrices."""
    out, k = {}, 0
    for a in n.quiver.arrows:
        r, c = n[a.name].shape
        out[a.name] = Matrix([vec[k + p * c : k + (p + 1) * c] for p in range(r)], n.field, cols=c)
        k += r * c
    return out


def cocycle_to_vector(n: Representation, f: Mapping[str, Matrix]) -> tuple:
    out = []
    for a in n.quiver.arrows:
        out.extend(f[a.name].entries())
    return tuple(out)


def in_tangent_space_at_zero(ideal: PolyIdeal, vec: Sequence) -> bool:
    """Does ``vec`` satisfy the linearization at 0 of every generator?"""
    jac = jacobian_at(ideal, [ideal.field.zero] * len(ideal.variables))
    v = [ideal.field(x) for x in vec]
    return all(not sum((a * b for a, b in zip(row, v)), ideal.field.zero) for row in jac)


def variable_degrees(n: Representation) -> dict[str, dict]:
    """Torus weight of each coordinate: deg X_a_p_q = e_(s(a), q) - e_(t(a), p)."""
    from .grading import multidegree

    return {variable_name(a, p, q): multidegree(n.quiver, n.dim, [((a, p, q), 1)]) for a, p, q in arrow_variables(n)}


def is_homogeneous(ideal: PolyIdeal, grading: Mapping[str, Mapping]) -> bool:
    """Every generator is homogeneous for the given per-variable multidegrees."""
    degs = [dict(grading[v]) for v in ideal.variables]
    for gen in ideal.generators:
        seen = None
        for e in gen.terms:
            total: dict = {}
            for k, x in enumerate(e):
                if x:
                    for key, val in degs[k].items():
                        total[key] = total.get(key, 0) + x * val
            total = {k: v for k, v in total.items() if v}
            if seen is None:
                seen = total
            elif total != seen:
                return False
    return True


def reduce_mod_p(n: Representation, p: int) -> Representation:
    """The same representation with rational entries read in F_p."""
    if n.field != QQ:
        raise OracleError("mirror runs start from a rational representation")
    field = GF(p)
    mats = {}
    for a, m in n.matrices.items():
        for x in m.entries():
            if Fraction(x).denominator % p == 0:
                raise OracleError(f"entry {x} has a denominator divisible by {p}")
        mats[a] = Matrix([[field(Fraction(x)) for x in row] for row in m], field, cols=m.cols)
    return Representation(n.quiver, n.dim, mats, field)


@dataclass
class OracleReport:
    generators: list
    variables: tuple
    ambient_dim: int
    closure_dim: int
    jacobian_rank_at_zero: int
    zero_on_closure: bool
    smooth_at_zero: Optional[bool]
    homogeneous: bool
    field: Field = QQ

    def codim(self) -> int:
        return self.ambient_dim - self.closure_dim


def run_oracle(
    n: Representation,
    budget: int = DEFAULT_BUDGET,
    max_vars: int = DEFAULT_MAX_VARS,
    mirror_prime: Optional[int] = None,
) -> OracleReport:
    from .ext import orbit_dim

    rep = reduce_mod_p(n, mirror_prime) if mirror_prime else n
    ideal = orbit_closure_ideal(rep, budget, max_vars)
    zero = [rep.field.zero] * len(ideal.variables)
    on = all(not g.evaluate(zero) for g in ideal.generators)
    closure_dim = orbit_dim(rep)
    jr = jacobian_rank_at_zero(ideal)
    smooth = smooth_at(ideal, zero, closure_dim) if on else None
    return OracleReport(
        ideal.generators,
        ideal.variables,
        rep.ambient_dim,
        closure_dim,
        jr,
        on,
        smooth,
        is_homogeneous(ideal, variable_degrees(rep)),
        rep.field,
    )
