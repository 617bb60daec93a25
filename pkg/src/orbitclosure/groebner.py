"""Buchberger's algorithm and elimination.

Polynomials are handled internally as plain ``{exponent: coeff}`` dicts and
kept monic.  Critical pairs are pruned with the Gebauer-Moeller criteria and
selected by the normal strategy (smallest lcm degree, ties by index).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Sequence

from .fields import Field, QQ
from .poly import GREVLEX, MonomialOrder, Poly


class ResourceBoundExceeded(RuntimeError):
    """A configured step or size limit was hit; not a mathematical failure."""


class OrderError(ValueError):
    pass


DEFAULT_BUDGET = 50_000


@dataclass
class PolyIdeal:
    generators: list
    variables: tuple
    order: MonomialOrder = GREVLEX
    field: Field = QQ
    # set by constructions that guarantee a prime ideal (orbit closures)
    prime: bool = False
    is_groebner: bool = False

    def __post_init__(self):
        self.variables = tuple(self.variables)
        for g in self.generators:
            if g.variables != self.variables:
                raise ValueError("generator over a different variable tuple")
        self.generators = [g for g in self.generators if g]

    def is_zero(self) -> bool:
        return not self.generators

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: tuple, b: tuple) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _neg(k):
    if isinstance(k, tuple):
        return tuple(_neg(x) for x in k)
    return -k


class _Reducer:
    def __init__(self, order: MonomialOrder, field: Field, budget: int):
        self.key = order.key
        self.field = field
        self.budget = budget
        self.steps = 0
        self._keys: dict = {}

    def heap_key(self, m):
        k = self._keys.get(m)
        if k is None:
            k = self._keys[m] = _neg(self.key(m))
        return k

    def lead(self, p: dict) -> tuple:
        return max(p, key=self.key)

    def monic(self, p: dict) -> dict:
        lc = p[self.lead(p)]
        if lc == self.field.one:
            return p
        inv = self.field.one / lc
        return {m: c * inv for m, c in p.items()}

    def normal_form(self, f: dict, basis: Sequence[tuple[tuple, dict]], full: bool = True) -> dict:
        """Remainder of f on division by monic ``basis`` entries (lead, poly)."""
        p = dict(f)
        heap = [(self.heap_key(m), m) for m in p]
        heapq.heapify(heap)
        rem = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = p.get(m)
            if c is None:
                continue
            for lm, g in basis:
                if _divides(lm, m):
                    self.steps += 1
                    if self.steps > self.budget:
                        raise ResourceBoundExceeded(f"Groebner reduction budget of {self.budget} steps exceeded")
                    shift = tuple(x - y for x, y in zip(m, lm))
                    for gm, gc in g.items():
                        t = tuple(x + y for x, y in zip(gm, shift))
                        v = p.get(t)
                        if v is None:
                            p[t] = -c * gc
                            heapq.heappush(heap, (self.heap_key(t), t))
                        else:
                            v = v - c * gc
                            if v:
                                p[t] = v
                            else:
                                del p[t]
                    break
            else:
                rem[m] = c
                del p[m]
                if not full:
                    rem.update(p)
                    return rem
        return rem

    def spoly(self, f: tuple[tuple, dict], g: tuple[tuple, dict]) -> dict:
        (lf, pf), (lg, pg) = f, g
        l = _lcm(lf, lg)
        sf = tuple(x - y for x, y in zip(l, lf))
        sg = tuple(x - y for x, y in zip(l, lg))
        out: dict = {}
        for m, c in pf.items():
            out[tuple(x + y for x, y in zip(m, sf))] = c
        for m, c in pg.items():
            t = tuple(x + y for x, y in zip(m, sg))
            v = out.get(t)
            if v is None:
                out[t] = -c
            else:
                v = v - c
                if v:
                    out[t] = v
                else:
                    del out[t]
        return out


def buchberger(ideal: PolyIdeal, budget: int = DEFAULT_BUDGET) -> PolyIdeal:
    """Reduced Groebner basis of ``ideal`` for its own monomial order."""
    red = _Reducer(ideal.order, ideal.field, budget)
    polys: list[tuple[tuple, dict]] = []
    active: list[int] = []
    pairs: list[tuple[int, int]] = []

    def lead(k):
        return polys[k][0]

    def update(k: int):
        nonlocal pairs, active
        lh = lead(k)
        cand = [(g, _lcm(lead(g), lh)) for g in active]
        kept: list[tuple[int, tuple]] = []
        for idx, (g, l) in enumerate(cand):
            if _coprime(lead(g), lh):
                kept.append((g, l))
                continue
            rivals = [l2 for _, l2 in cand[idx + 1 :]] + [l2 for _, l2 in kept]
            if not any(_divides(l2, l) for l2 in rivals):
                kept.append((g, l))
        fresh = [(g, k) for g, _ in kept if not _coprime(lead(g), lh)]
        survivors = []
        for a, b in pairs:
            l = _lcm(lead(a), lead(b))
            if _divides(lh, l) and _lcm(lead(a), lh) != l and _lcm(lead(b), lh) != l:
                continue
            survivors.append((a, b))
        pairs = survivors + fresh
        active = [g for g in active if not _divides(lh, lead(g))] + [k]

    def insert(h: dict) -> bool:
        h = red.monic(h)
        polys.append((red.lead(h), h))
        update(len(polys) - 1)
        return sum(polys[-1][0]) == 0

    unit = False
    for g in ideal.generators:
        h = red.normal_form(g.terms, [polys[i] for i in active])
        if h and insert(h):
            unit = True
            break

    while pairs and not unit:
        best = min(range(len(pairs)), key=lambda t: (sum(_lcm(lead(pairs[t][0]), lead(pairs[t][1]))), pairs[t][1], pairs[t][0]))
        a, b = pairs.pop(best)
        s = red.spoly(polys[a], polys[b])
        if not s:
            continue
        h = red.normal_form(s, [polys[i] for i in active])
        if h and insert(h):
            unit = True

    if unit:
        one = Poly.constant(1, ideal.variables, ideal.field)
        return PolyIdeal([one], ideal.variables, ideal.order, ideal.field, ideal.prime, True)
    basis = [polys[i] for i in active]
    reduced = []
    for k, (lm, p) in enumerate(basis):
        others = basis[:k] + basis[k + 1 :]
        reduced.append((lm, red.monic(red.normal_form(p, others))))
    reduced.sort(key=lambda b: red.key(b[0]))
    gens = [Poly._raw(p, ideal.variables, ideal.field) for _, p in reduced]
    return PolyIdeal(gens, ideal.variables, ideal.order, ideal.field, ideal.prime, True)


def normal_form(f: Poly, gb: PolyIdeal, budget: int = DEFAULT_BUDGET) -> Poly:
    red = _Reducer(gb.order, gb.field, budget)
    basis = [(red.lead(g.terms), red.monic(g.terms)) for g in gb.generators]
    return Poly._raw(red.normal_form(f.terms, basis), gb.variables, gb.field)


def contains(gb: PolyIdeal, f: Poly) -> bool:
    if not gb.is_groebner:
        raise ValueError("membership needs a Groebner basis")
    return normal_form(f, gb).is_zero()


def same_ideal(i: PolyIdeal, j: PolyIdeal, budget: int = DEFAULT_BUDGET) -> bool:
    """Mutual membership of generators, each side tested against the other's Groebner basis."""
    gi = i if i.is_groebner else buchberger(i, budget)
    gj = j if j.is_groebner else buchberger(j, budget)
    return all(contains(gj, f) for f in i.generators) and all(contains(gi, f) for f in j.generators)


def eliminate(ideal: PolyIdeal, drop: Iterable[str], budget: int = DEFAULT_BUDGET) -> PolyIdeal:
    """Generators of the intersection of ``ideal`` with the ring of the kept variables."""
    drop = list(drop)
    idx = [ideal.variables.index(v) for v in drop]
    if not ideal.order.is_elimination_for(len(ideal.variables), idx):
        raise OrderError(f"{ideal.order.name} is not an elimination order for {drop}")
    gb = ideal if ideal.is_groebner else buchberger(ideal, budget)
    keep = tuple(v for v in ideal.variables if v not in set(drop))
    gens = [g.restrict_variables(keep) for g in gb.generators if not g.uses(idx)]
    return PolyIdeal(gens, keep, _restricted_order(ideal.order, len(drop)), ideal.field, ideal.prime, True)


def _restricted_order(order: MonomialOrder, ndrop: int) -> MonomialOrder:
    """The order induced on the kept (trailing) variables."""
    if order.name == "lex":
        return order
    inner = order.key

    def key(e):
        return inner((0,) * ndrop + tuple(e))

    return MonomialOrder(f"{order.name}|kept", key)
