"""Exact scalar fields: the rationals and prime fields F_p.

Rational scalars are plain :class:`fractions.Fraction` values.  Prime-field
scalars are :class:`ModP` values, canonical residues in ``[0, p)``.  A field
descriptor converts literals and integers into its own elements, so every
other module can stay agnostic of which field it is working over.

Working over Q instead of its algebraic closure is harmless for everything
computed here: ranks, Hom/Ext dimensions, Groebner bases and ideal
membership are all unchanged by extending the ground field.
"""

from __future__ import annotations

import random
from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class ModP:
    """An element of the prime field F_p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o, self.p) / self

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return ModP(pow(self.value, -1, self.p), self.p) ** (-n)
        return ModP(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.value - o) % self.p == 0

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class Field:
    """Base class for field descriptors."""

    characteristic = 0

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, literal: str):
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    def random_element(self, rng: random.Random, bound: int = 5):
        raise NotImplementedError

    def elements(self):
        raise FieldError(f"{self} is infinite")


class Rationals(Field):
    characteristic = 0

    def __call__(self, value):
        if isinstance(value, ModP):
            raise FieldError("cannot coerce a prime-field element into Q")
        return Fraction(value)

    def parse(self, literal: str):
        try:
            return Fraction(literal.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational literal {literal!r}") from exc

    def random_element(self, rng, bound=5):
        return Fraction(rng.randint(-bound, bound))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, value):
        if isinstance(value, ModP):
            if value.p != self.p:
                raise FieldError(f"cannot coerce F_{value.p} element into F_{self.p}")
            return value
        if isinstance(value, Fraction):
            return ModP(value.numerator, self.p) / value.denominator
        return ModP(int(value), self.p)

    def parse(self, literal: str):
        text = literal.strip()
        try:
            if "/" in text:
                return self(Fraction(text))
            return ModP(int(text), self.p)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad F_{self.p} literal {literal!r}") from exc

    def random_element(self, rng, bound=5):
        return ModP(rng.randrange(self.p), self.p)

    def elements(self):
        return [ModP(v, self.p) for v in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F_{self.p}"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
