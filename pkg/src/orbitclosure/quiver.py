"""Quivers, paths and elements of path algebras.

Paths are written right to left: ``b*a`` means "first ``a``, then ``b``".
A :class:`Path` stores its arrows in that written order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Optional, Sequence

from .fields import Field, QQ


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    """A finite quiver with named vertices and arrows (loops and multiple arrows allowed)."""

    def __init__(self, vertices: Sequence[str], arrows: Iterable[tuple[str, str, str]] = ()):
        self.vertices: tuple[str, ...] = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError("duplicate vertex id")
        vset = set(self.vertices)
        arrs = []
        for a in arrows:
            arrow = a if isinstance(a, Arrow) else Arrow(str(a[0]), str(a[1]), str(a[2]))
            if arrow.source not in vset or arrow.target not in vset:
                raise QuiverError(f"arrow {arrow.name} uses an undeclared vertex")
            arrs.append(arrow)
        self.arrows: tuple[Arrow, ...] = tuple(arrs)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError("duplicate arrow id")
        self._arrow = {a.name: a for a in self.arrows}
        self._vindex = {v: k for k, v in enumerate(self.vertices)}

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrow[name]
        except KeyError:
            raise QuiverError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._arrow

    def vertex_index(self, v: str) -> int:
        try:
            return self._vindex[v]
        except KeyError:
            raise QuiverError(f"unknown vertex {v!r}") from None

    def check_vertex(self, v: str) -> None:
        self.vertex_index(v)

    def arrows_between(self, i: str, j: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == i and a.target == j]

    def arrows_from(self, i: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == i]

    def loops(self) -> list[Arrow]:
        return [a for a in self.arrows if a.source == a.target]

    def subquiver(self, vertices: Optional[Iterable[str]] = None, arrows: Optional[Iterable[str]] = None) -> "Quiver":
        """Full subquiver on ``vertices`` restricted to the named ``arrows``."""
        keep_v = set(self.vertices if vertices is None else vertices)
        keep_a = set(a.name for a in self.arrows) if arrows is None else set(arrows)
        return Quiver(
            [v for v in self.vertices if v in keep_v],
            [a for a in self.arrows if a.name in keep_a and a.source in keep_v and a.target in keep_v],
        )

    def __eq__(self, other):
        return isinstance(other, Quiver) and (self.vertices, self.arrows) == (other.vertices, other.arrows)

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        arrs = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver(vertices={list(self.vertices)}, arrows=[{arrs}])"


@dataclass(frozen=True)
class Path:
    """A path ``arrows[0] * ... * arrows[-1]``; the last entry is applied first."""

    source: str
    target: str
    arrows: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @classmethod
    def trivial(cls, vertex: str) -> "Path":
        return cls(vertex, vertex, ())

    @classmethod
    def of(cls, quiver: Quiver, arrows: Sequence[str]) -> "Path":
        """Build a path from arrow names in written (right-to-left) order."""
        if not arrows:
            raise QuiverError("use Path.trivial for paths of length zero")
        arrs = [quiver.arrow(a) for a in arrows]
        for later, earlier in zip(arrs, arrs[1:]):
            if later.source != earlier.target:
                raise QuiverError(f"arrows {later.name} and {earlier.name} do not compose")
        return cls(arrs[-1].source, arrs[0].target, tuple(arrows))

    def applied_order(self) -> tuple[str, ...]:
        """Arrows in the order they act."""
        return tuple(reversed(self.arrows))

    def sort_key(self):
        return (self.length, self.arrows, self.source)

    def __mul__(self, other: "Path") -> "Path":
        """``self * other``: follow ``other`` first, then ``self``."""
        if other.target != self.source:
            raise QuiverError("paths do not compose")
        return Path(other.source, self.target, self.arrows + other.arrows)

    def __str__(self):
        if not self.arrows:
            return f"e{self.source}"
        return "*".join(self.arrows)


def enumerate_paths(q: Quiver, i: str, j: str, max_len: int) -> list[Path]:
    """All paths from ``i`` to ``j`` of length at most ``max_len``."""
    q.check_vertex(i)
    q.check_vertex(j)
    if max_len < 0:
        raise QuiverError("max_len must be nonnegative")
    found = []
    frontier = [Path.trivial(i)]
    for length in range(max_len + 1):
        found.extend(p for p in frontier if p.target == j)
        if length == max_len:
            break
        frontier = [Path(p.source, a.target, (a.name,) + p.arrows) for p in frontier for a in q.arrows_from(p.target)]
        if not frontier:
            break
    return sorted(found, key=Path.sort_key)


def is_acyclic(q: Quiver) -> bool:
    indeg = {v: 0 for v in q.vertices}
    for a in q.arrows:
        indeg[a.target] += 1
    queue = deque(v for v in q.vertices if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for a in q.arrows_from(v):
            indeg[a.target] -= 1
            if indeg[a.target] == 0:
                queue.append(a.target)
    return seen == len(q.vertices)


def longest_path_length(q: Quiver) -> int:
    """Length of the longest path of an acyclic quiver."""
    if not is_acyclic(q):
        raise QuiverError("quiver has oriented cycles")
    best = {v: 0 for v in q.vertices}
    changed = True
    while changed:
        changed = False
        for a in q.arrows:
            if best[a.source] + 1 > best[a.target]:
                best[a.target] = best[a.source] + 1
                changed = True
    return max(best.values(), default=0)


def check_dim_vector(q: Quiver, d: Mapping[str, int]) -> dict[str, int]:
    if set(d) != set(q.vertices):
        raise QuiverError("dimension vector must be defined on exactly the quiver's vertices")
    out = {}
    for v in q.vertices:
        n = int(d[v])
        if n < 0:
            raise QuiverError(f"negative dimension at vertex {v}")
        out[v] = n
    return out


def euler_form(q: Quiver, d: Mapping[str, int], e: Mapping[str, int]) -> int:
    d = check_dim_vector(q, d)
    e = check_dim_vector(q, e)
    return sum(d[v] * e[v] for v in q.vertices) - sum(d[a.source] * e[a.target] for a in q.arrows)


def radical_power_basis(q: Quiver, r: int, max_len: int) -> list[Path]:
    """Paths of length between ``r`` and ``max_len``: a basis of that slice of the r-th arrow-ideal power."""
    if r < 1:
        raise QuiverError("r must be positive")
    out = []
    for i in q.vertices:
        for j in q.vertices:
            out.extend(p for p in enumerate_paths(q, i, j, max_len) if p.length >= r)
    return sorted(out, key=Path.sort_key)


@dataclass(frozen=True)
class PathAlgebraElement:
    """A linear combination of paths, all from ``source`` to ``target``."""

    source: str
    target: str
    terms: Mapping[Path, object] = dc_field(default_factory=dict)
    field: Field = QQ

    def __post_init__(self):
        clean = {}
        for p, c in self.terms.items():
            if (p.source, p.target) != (self.source, self.target):
                raise QuiverError(f"path {p} does not run from {self.source} to {self.target}")
            c = self.field(c)
            if c:
                clean[p] = c
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=lambda kv: kv[0].sort_key())))

    @classmethod
    def from_path(cls, path: Path, coeff=1, field: Field = QQ) -> "PathAlgebraElement":
        return cls(path.source, path.target, {path: coeff}, field)

    @classmethod
    def zero(cls, source: str, target: str, field: Field = QQ) -> "PathAlgebraElement":
        return cls(source, target, {}, field)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if (self.source, self.target) != (other.source, other.target):
            raise QuiverError("elements live in different vertex pairs")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, self.field.zero) + c
        return PathAlgebraElement(self.source, self.target, terms, self.field)

    def __neg__(self):
        return PathAlgebraElement(self.source, self.target, {p: -c for p, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PathAlgebraElement":
        c = self.field(c)
        return PathAlgebraElement(self.source, self.target, {p: c * v for p, v in self.terms.items()}, self.field)

    def __mul__(self, other: "PathAlgebraElement") -> "PathAlgebraElement":
        """Composition: ``other`` first, then ``self``; zero when the endpoints do not match."""
        if other.target != self.source:
            return PathAlgebraElement.zero(other.source, self.target, self.field)
        terms: dict[Path, object] = {}
        for p, c in self.terms.items():
            for q_, d in other.terms.items():
                pq = p * q_
                terms[pq] = terms.get(pq, self.field.zero) + c * d
        return PathAlgebraElement(other.source, self.target, terms, self.field)

    def component(self, length: int) -> "PathAlgebraElement":
        return PathAlgebraElement(
            self.source, self.target, {p: c for p, c in self.terms.items() if p.length == length}, self.field
        )

    def lengths(self) -> set[int]:
        return {p.length for p in self.terms}

    def arrows_used(self) -> set[str]:
        return {a for p in self.terms for a in p.arrows}

    def substitute(self, q: Quiver, arrow: str, replacement: Optional["PathAlgebraElement"]) -> "PathAlgebraElement":
        """Replace every occurrence of ``arrow`` by ``replacement`` (``None`` means zero)."""
        total = PathAlgebraElement.zero(self.source, self.target, self.field)
        for p, c in self.terms.items():
            if arrow not in p.arrows:
                total = total + PathAlgebraElement(self.source, self.target, {p: c}, self.field)
                continue
            if replacement is None:
                continue
            acc = PathAlgebraElement.from_path(Path.trivial(p.source), c, self.field)
            for name in p.applied_order():
                if name == arrow:
                    factor = replacement
                else:
                    a = q.arrow(name)
                    factor = PathAlgebraElement.from_path(Path(a.source, a.target, (name,)), 1, self.field)
                acc = factor * acc
            total = total + acc
        return total

    def __str__(self):
        return format_element(self)


def format_element(rho: PathAlgebraElement) -> str:
    """Text form ``c1 path1 + c2 path2 ...`` used by the instance format."""
    if rho.is_zero():
        return "0"
    parts = []
    for k, (p, c) in enumerate(rho.terms.items()):
        text = rho.field.format(c)
        if k == 0:
            parts.append(f"{text} {p}")
        elif text.startswith("-"):
            parts.append(f"- {text[1:]} {p}")
        else:
            parts.append(f"+ {text} {p}")
    return " ".join(parts)
