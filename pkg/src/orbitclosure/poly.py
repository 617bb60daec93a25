"""Sparse multivariate polynomials with exact coefficients.

A :class:`Poly` is a dict from exponent tuples to nonzero field elements over
a fixed, ordered tuple of variable names.  Monomial orders are key functions
on exponent tuples; a larger key means a larger monomial.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Optional, Sequence

from .fields import Field, QQ


class MonomialOrder:
    """A monomial order given by a sort key on exponent tuples."""

    def __init__(self, name: str, key: Callable[[tuple], tuple], blocks: Optional[tuple[int, ...]] = None):
        self.name = name
        self.key = key
        # block sizes, outermost first; None for a plain order
        self.blocks = blocks

    def __repr__(self):
        return f"MonomialOrder({self.name})"

    def is_elimination_for(self, nvars: int, drop: Iterable[int]) -> bool:
        """True if every monomial containing a dropped variable beats all monomials free of them."""
        drop = set(drop)
        if not drop:
            return True
        if self.name == "lex":
            return drop == set(range(len(drop)))
        if self.blocks is not None:
            return drop == set(range(self.blocks[0]))
        return False


def _lex_key(e):
    return e


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


LEX = MonomialOrder("lex", _lex_key)
GREVLEX = MonomialOrder("grevlex", _grevlex_key)


def block_order(first: int, inner: str = "lex", outer_inner: Optional[str] = None) -> MonomialOrder:
    """Product order: the first ``first`` variables form a block that dominates the rest.

    Within each block monomials are compared by ``inner`` (``lex`` or ``grevlex``).
    """
    k1 = _lex_key if inner == "lex" else _grevlex_key
    k2 = k1 if outer_inner is None else (_lex_key if outer_inner == "lex" else _grevlex_key)

    def key(e):
        return (k1(e[:first]), k2(e[first:]))

    return MonomialOrder(f"block({inner},{outer_inner or inner};{first})", key, (first,))


def order_by_name(name: str) -> MonomialOrder:
    if name == "lex":
        return LEX
    if name == "grevlex":
        return GREVLEX
    raise ValueError(f"unknown monomial order {name!r}")


class Poly:
    __slots__ = ("terms", "variables", "field")

    def __init__(self, terms: Mapping[tuple, object], variables: Sequence[str], field: Field = QQ):
        self.variables = tuple(variables)
        self.field = field
        n = len(self.variables)
        clean = {}
        for e, c in terms.items():
            if len(e) != n:
                raise ValueError("exponent length does not match the variable count")
            c = field(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms, variables, field):
        p = object.__new__(cls)
        p.terms = terms
        p.variables = variables
        p.field = field
        return p

    @classmethod
    def zero(cls, variables, field=QQ):
        return cls._raw({}, tuple(variables), field)

    @classmethod
    def constant(cls, c, variables, field=QQ):
        return cls({(0,) * len(variables): c}, variables, field)

    @classmethod
    def var(cls, name: str, variables, field=QQ):
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = 1
        return cls._raw({tuple(e): field.one}, variables, field)

    @classmethod
    def gens(cls, variables, field=QQ):
        return [cls.var(v, variables, field) for v in variables]

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise ValueError("polynomials over different variable sets")
            return other
        return Poly.constant(other, self.variables, self.field)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e)
            if v is None:
                t[e] = c
            else:
                v = v + c
                if v:
                    t[e] = v
                else:
                    del t[e]
        return Poly._raw(t, self.variables, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self.terms.items()}, self.variables, self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.field(other)
            if not c:
                return Poly.zero(self.variables, self.field)
            return Poly._raw({e: c * v for e, v in self.terms.items()}, self.variables, self.field)
        other = self._lift(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e)
                t[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly._raw({e: c for e, c in t.items() if c}, self.variables, self.field)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly.constant(1, self.variables, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.variables == other.variables and self.terms == other.terms
        return self == self._lift(other)

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def leading_monomial(self, order: MonomialOrder) -> tuple:
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Poly":
        if not self.terms:
            return self
        inv = self.field.one / self.leading_coefficient(order)
        return self * inv

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[tuple, object]]:
        return sorted(self.terms.items(), key=lambda kv: order.key(kv[0]), reverse=True)

    def evaluate(self, point: Sequence):
        total = self.field.zero
        pt = [self.field(x) for x in point]
        for e, c in self.terms.items():
            term = c
            for x, k in zip(pt, e):
                if k:
                    term = term * x ** k
            total = total + term
        return total

    def diff(self, index: int) -> "Poly":
        t = {}
        for e, c in self.terms.items():
            k = e[index]
            if k:
                e2 = list(e)
                e2[index] = k - 1
                t[tuple(e2)] = c * k
        return Poly._raw({e: c for e, c in t.items() if c}, self.variables, self.field)

    def uses(self, indices: Iterable[int]) -> bool:
        idx = list(indices)
        return any(e[i] for e in self.terms for i in idx)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    def linear_part(self) -> list:
        """Coefficients of the degree-one monomials, one per variable."""
        out = [self.field.zero] * self.nvars
        for e, c in self.terms.items():
            if sum(e) == 1:
                out[e.index(1)] = c
        return out

    def restrict_variables(self, keep: Sequence[str]) -> "Poly":
        """Re-express over the sub-tuple ``keep``; the dropped variables must not occur."""
        idx = [self.variables.index(v) for v in keep]
        dropped = [i for i in range(self.nvars) if i not in idx]
        if self.uses(dropped):
            raise ValueError("polynomial uses a dropped variable")
        return Poly._raw({tuple(e[i] for i in idx): c for e, c in self.terms.items()}, tuple(keep), self.field)

    def to_str(self, order: MonomialOrder = GREVLEX) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.sorted_terms(order)):
            mono = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.variables, e) if x
            )
            neg = False
            text = self.field.format(c)
            if text.startswith("-"):
                neg, text = True, text[1:]
            if mono:
                body = mono if text == "1" else f"{text}*{mono}"
            else:
                body = text
            if k == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self.to_str()})"

    __str__ = to_str


def poly_det(m: Sequence[Sequence[Poly]], variables, field=QQ) -> Poly:
    """Determinant of a square matrix of polynomials by Laplace expansion over column subsets."""
    n = len(m)
    if n == 0:
        return Poly.constant(1, variables, field)
    # partial[mask]: minor of the first popcount(mask) rows on the columns in mask
    partial = {0: Poly.constant(1, variables, field)}
    for r in range(n):
        nxt: dict[int, Poly] = {}
        for mask, minor in partial.items():
            if not minor:
                continue
            for c in range(n):
                if mask >> c & 1:
                    continue
                entry = m[r][c]
                if not entry:
                    continue
                sign = -1 if bin(mask >> (c + 1)).count("1") % 2 else 1
                term = minor * entry
                if sign < 0:
                    term = -term
                key = mask | (1 << c)
                nxt[key] = nxt[key] + term if key in nxt else term
        partial = nxt
    return partial.get((1 << n) - 1, Poly.zero(variables, field))
