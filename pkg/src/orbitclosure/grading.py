"""The torus multigrading on coordinate functions of rep_Q(d).

The diagonal torus of GL(d) scales the coordinate X_a_p_q with weight
``e_(s(a), q) - e_(t(a), p)``, indexed by pairs (vertex, position).
Monomials are lists of ``((arrow, p, q), exponent)`` with 1-based p, q.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Mapping, Optional, Sequence

from .quiver import Path, Quiver, check_dim_vector

Variable = tuple  # (arrow, p, q)
Monomial = Sequence  # of (Variable, exponent)
# (vertex, position) -> nonzero integer
Multidegree = dict


class GradingError(ValueError):
    pass


def _check_variable(q: Quiver, d: Mapping[str, int], var: Variable):
    a, p, c = var
    arrow = q.arrow(a)
    if not (1 <= p <= d[arrow.target] and 1 <= c <= d[arrow.source]):
        raise GradingError(f"index ({p}, {c}) out of range for arrow {a}")


def multidegree(q: Quiver, d: Mapping[str, int], monomial: Monomial) -> Multidegree:
    d = check_dim_vector(q, d)
    total: Counter = Counter()
    for var, k in monomial:
        _check_variable(q, d, var)
        a, p, c = var
        arrow = q.arrow(a)
        total[(arrow.source, c)] += k
        total[(arrow.target, p)] -= k
    return {key: v for key, v in sorted(total.items(), key=lambda kv: (q.vertex_index(kv[0][0]), kv[0][1])) if v}


def unit_degree(i: str, p: int) -> Multidegree:
    return {(i, p): 1}


def path_degree(s: str, v: int, t: str, u: int) -> Multidegree:
    """e_(s, v) - e_(t, u)."""
    if (s, v) == (t, u):
        return {}
    return {(s, v): 1, (t, u): -1}


def all_variables(q: Quiver, d: Mapping[str, int]) -> list[Variable]:
    return [
        (a.name, p, c)
        for a in q.arrows
        for p in range(1, d[a.target] + 1)
        for c in range(1, d[a.source] + 1)
    ]


def _collect(combo) -> list:
    counts = Counter(combo)
    return sorted(counts.items())


def zero_degree_monomials(q: Quiver, d: Mapping[str, int], max_total_degree: int) -> list[list]:
    """All monomials of multidegree 0 and total degree at most the bound (the empty list is 1)."""
    d = check_dim_vector(q, d)
    variables = all_variables(q, d)
    out = []
    for deg in range(max_total_degree + 1):
        for combo in combinations_with_replacement(variables, deg):
            mono = _collect(combo)
            if not multidegree(q, d, mono):
                out.append(mono)
    return out


@dataclass(frozen=True)
class PathFactor:
    path: Path
    # index chain v = p_0, p_1, ..., p_m = u along the path
    indices: tuple[int, ...]
    residual: tuple


def path_monomial_factor(q: Quiver, d: Mapping[str, int], monomial: Monomial, target_degree: Multidegree) -> Optional[PathFactor]:
    """Split off a chained factor X_(am, u, p_(m-1)) ... X_(a1, p_1, v) realizing e_(s,v) - e_(t,u).

    The rest of the monomial is returned as the residual.  ``None`` when no
    such chain can be formed, including when the monomial does not have the
    target degree or the target is not of the form e_(s,v) - e_(t,u).
    """
    d = check_dim_vector(q, d)
    if multidegree(q, d, monomial) != dict(target_degree):
        return None
    pos = [k for k, v in target_degree.items() if v == 1]
    neg = [k for k, v in target_degree.items() if v == -1]
    if len(pos) != 1 or len(neg) != 1 or len(target_degree) != 2:
        return None
    (s, v), (t, u) = pos[0], neg[0]
    pool = Counter()
    for var, k in monomial:
        pool[tuple(var)] += k

    def search(vertex, index, chain):
        if chain and (vertex, index) == (t, u):
            return chain
        for var in sorted(pool):
            if pool[var] == 0:
                continue
            a, p, c = var
            arrow = q.arrow(a)
            if arrow.source == vertex and c == index:
                pool[var] -= 1
                found = search(arrow.target, p, chain + [var])
                if found is not None:
                    return found
                pool[var] += 1
        return None

    chain = search(s, v, [])
    if chain is None:
        return None
    arrows = tuple(var[0] for var in reversed(chain))
    path = Path.of(q, arrows)
    indices = (v,) + tuple(var[1] for var in chain)
    residual = tuple(sorted((var, k) for var, k in pool.items() if k))
    return PathFactor(path, indices, residual)
