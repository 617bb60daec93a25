"""One-parameter degenerations of a nilpotent representation to zero.

Pick a composition flag e_1..e_D and strictly decreasing weights p_1 > ... > p_D.
The cocharacter phi(t) scales e_b by t^(p_b); in the flag basis the entry
(i, b) of every arrow matrix is multiplied by t^(p_i - p_b).  Flag prefixes
are subrepresentations, so only entries with i < b are nonzero and every
exponent is positive: the curve tends to 0 as t -> 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .linalg import Matrix
from .representation import (
    Representation,
    RepresentationError,
    act,
    composition_flag,
    flag_matrices,
    is_flag_valid,
)


class DegenerationError(ValueError):
    pass


def default_weights(big_d: int) -> tuple[int, ...]:
    """p_b = D - b + 1, so adjacent flag steps differ by exactly 1."""
    return tuple(big_d - b + 1 for b in range(1, big_d + 1))


@dataclass(frozen=True)
class DegenerationSpec:
    flag: tuple
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "flag", tuple(self.flag))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.flag) != len(self.weights):
            raise DegenerationError(f"{len(self.weights)} weights given for a flag of length {len(self.flag)}")
        if any(a <= b for a, b in zip(self.weights, self.weights[1:])):
            raise DegenerationError("weights must be strictly decreasing")

    @classmethod
    def for_representation(cls, n: Representation, weights: Optional[Sequence[int]] = None) -> "DegenerationSpec":
        try:
            flag = composition_flag(n)
        except RepresentationError as exc:
            raise DegenerationError(str(exc)) from exc
        return cls(flag, default_weights(len(flag)) if weights is None else weights)


@dataclass
class Degeneration:
    rep: Representation
    spec: DegenerationSpec
    # arrow -> {exponent: coefficient matrix in the original basis}
    table: dict

    def at(self, t) -> Representation:
        field = self.rep.field
        t = field(t)
        mats = {}
        for a in self.rep.quiver.arrows:
            m = Matrix.zeros(*self.rep[a.name].shape, field)
            for e, coeff in self.table[a.name].items():
                m = m + coeff.scale(t**e)
            mats[a.name] = m
        return self.rep.replace(mats)

    def group_element(self, t) -> dict[str, Matrix]:
        """phi(t) per vertex: P diag(t^p_b) P^-1."""
        field = self.rep.field
        t = field(t)
        if not t:
            raise DegenerationError("phi(t) is only invertible for t != 0")
        ps = flag_matrices(self.rep, self.spec.flag)
        weights = {i: [] for i in self.rep.quiver.vertices}
        for fv, w in zip(self.spec.flag, self.spec.weights):
            weights[fv.vertex].append(w)
        out = {}
        for i, p in ps.items():
            diag = Matrix([[t ** w if r == c else field.zero for c, _ in enumerate(weights[i])] for r, w in enumerate(weights[i])],
                          field, cols=len(weights[i]))
            out[i] = p @ diag @ p.inverse() if p.rows else p
        return out

    @property
    def limit(self) -> Representation:
        return Representation.zero(self.rep.quiver, self.rep.dim, self.rep.field)

    @property
    def tangent(self) -> dict[str, Matrix]:
        """Coefficient of t^1, arrow by arrow."""
        field = self.rep.field
        return {a.name: self.table[a.name].get(1, Matrix.zeros(*self.rep[a.name].shape, field)) for a in self.rep.quiver.arrows}

    def exponents(self) -> dict[str, list[int]]:
        return {a: sorted(tab) for a, tab in self.table.items()}


def degenerate(n: Representation, spec: DegenerationSpec) -> Degeneration:
    if not is_flag_valid(n, spec.flag):
        raise DegenerationError("flag is not a composition series of the representation")
    field = n.field
    ps = flag_matrices(n, spec.flag)
    # global flag position of each per-vertex column
    positions = {i: [] for i in n.quiver.vertices}
    for b, fv in enumerate(spec.flag):
        positions[fv.vertex].append(b)
    table = {}
    for a in n.quiver.arrows:
        s, t = a.source, a.target
        m = ps[t].inverse() @ n[a.name] @ ps[s] if n[a.name].rows and n[a.name].cols else n[a.name]
        by_exp: dict[int, list[list]] = {}
        for r in range(m.rows):
            for c in range(m.cols):
                if not m[r, c]:
                    continue
                i, b = positions[t][r], positions[s][c]
                if i >= b:
                    raise DegenerationError(f"arrow {a.name} has a nonzero flag entry ({i + 1}, {b + 1}) on or below the diagonal")
                e = spec.weights[i] - spec.weights[b]
                mask = by_exp.setdefault(e, [[field.zero] * m.cols for _ in range(m.rows)])
                mask[r][c] = m[r, c]
        table[a.name] = {
            e: ps[t] @ Matrix(mask, field, cols=m.cols) @ ps[s].inverse() for e, mask in sorted(by_exp.items())
        }
    return Degeneration(n, spec, table)


def curve_point_via_group(d: Degeneration, t) -> Representation:
    """act(phi(t), N), for comparison with :meth:`Degeneration.at`."""
    return act(d.group_element(t), d.rep)

