"""Plain-text instance files.

Line oriented; ``#`` starts a comment and blank lines are ignored::

    vertex 1
    vertex 2
    arrow a 1 2
    field Q
    dim 1 1
    matrix a
    1
    relation 1 b*a

``matrix`` is followed by d_t rows of d_s scalars.  Paths in relations are
written right to left (``b*a`` is a then b); ``e<v>`` is the trivial path.
Vertices, arrows, field and dim must precede the matrices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .fields import GF, Field, FieldError, QQ
from .linalg import Matrix
from .quiver import Path, PathAlgebraElement, Quiver, QuiverError, format_element
from .representation import Representation, RepresentationError


class InstanceError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class Instance:
    rep: Representation
    relations: list = dc_field(default_factory=list)
    # indices into ``relations`` of those that do not vanish on rep
    failing_relations: list = dc_field(default_factory=list)

    @property
    def quiver(self) -> Quiver:
        return self.rep.quiver

    @property
    def field(self) -> Field:
        return self.rep.field

    def warnings(self) -> list[str]:
        return [f"relation '{format_element(self.relations[k])}' does not vanish on the representation"
                for k in self.failing_relations]


_IDENT = re.compile(r"^[A-Za-z0-9_.']+$")


def _ident(tok: str, what: str, line: int) -> str:
    if not _IDENT.match(tok):
        raise InstanceError(f"bad {what} id {tok!r}", line)
    return tok


def _parse_path(q: Quiver, text: str, line: int) -> Path:
    names = text.split("*")
    if len(names) == 1 and not q.has_arrow(names[0]) and names[0].startswith("e") and names[0][1:] in q.vertices:
        return Path.trivial(names[0][1:])
    for name in names:
        if not q.has_arrow(name):
            raise InstanceError(f"unknown arrow {name!r} in path {text!r}", line)
    try:
        # written left to right as am*...*a1, stored in written order
        return Path.of(q, tuple(names))
    except QuiverError as exc:
        raise InstanceError(f"path {text!r} does not compose: {exc}", line) from None


def _parse_relation(q: Quiver, field: Field, toks: list[str], line: int) -> PathAlgebraElement:
    if not toks:
        raise InstanceError("empty relation", line)
    terms = []
    k = 0
    sign = 1
    while k < len(toks):
        if terms:
            if toks[k] not in ("+", "-"):
                raise InstanceError(f"expected '+' or '-', got {toks[k]!r}", line)
            sign = 1 if toks[k] == "+" else -1
            k += 1
        if k + 1 >= len(toks):
            raise InstanceError("relation term needs a coefficient and a path", line)
        try:
            c = field.parse(toks[k])
        except (FieldError, ValueError, ZeroDivisionError):
            raise InstanceError(f"bad coefficient {toks[k]!r}", line) from None
        terms.append((c if sign > 0 else -c, _parse_path(q, toks[k + 1], line)))
        k += 2
    s, t = terms[0][1].source, terms[0][1].target
    total = PathAlgebraElement.zero(s, t, field)
    for c, p in terms:
        if (p.source, p.target) != (s, t):
            raise InstanceError("relation mixes paths with different endpoints", line)
        total = total + PathAlgebraElement.from_path(p, c, field)
    if total.is_zero():
        raise InstanceError("relation is the zero element", line)
    return total


def parse(text: str) -> Instance:
    vertices: list[str] = []
    arrows: list[tuple[str, str, str]] = []
    field: Field | None = None
    dim: dict[str, int] | None = None
    quiver: Quiver | None = None
    matrices: dict[str, Matrix] = {}
    relations: list[tuple[list[str], int]] = []
    lines = [(k + 1, raw.split("#", 1)[0].split()) for k, raw in enumerate(text.splitlines())]
    lines = [(n, toks) for n, toks in lines if toks]
    pos = 0

    def frozen(what: str, line: int):
        if quiver is not None:
            raise InstanceError(f"{what} after the first matrix", line)

    while pos < len(lines):
        lineno, toks = lines[pos]
        pos += 1
        key, args = toks[0], toks[1:]
        if key == "vertex":
            frozen("vertex", lineno)
            if len(args) != 1:
                raise InstanceError("usage: vertex <id>", lineno)
            v = _ident(args[0], "vertex", lineno)
            if v in vertices:
                raise InstanceError(f"duplicate vertex {v}", lineno)
            vertices.append(v)
        elif key == "arrow":
            frozen("arrow", lineno)
            if len(args) != 3:
                raise InstanceError("usage: arrow <id> <src> <dst>", lineno)
            name = _ident(args[0], "arrow", lineno)
            if any(a[0] == name for a in arrows):
                raise InstanceError(f"duplicate arrow {name}", lineno)
            for v in args[1:]:
                if v not in vertices:
                    raise InstanceError(f"unknown vertex {v!r}", lineno)
            arrows.append((name, args[1], args[2]))
        elif key == "field":
            frozen("field", lineno)
            if field is not None:
                raise InstanceError("field declared twice", lineno)
            if args == ["Q"]:
                field = QQ
            elif len(args) == 2 and args[0] == "F" and args[1].isdigit():
                try:
                    field = GF(int(args[1]))
                except FieldError as exc:
                    raise InstanceError(str(exc), lineno) from None
            else:
                raise InstanceError("usage: field Q | field F <p>", lineno)
        elif key == "dim":
            frozen("dim", lineno)
            if dim is not None:
                raise InstanceError("dim declared twice", lineno)
            if len(args) != len(vertices):
                raise InstanceError(f"dim needs {len(vertices)} entries, got {len(args)}", lineno)
            if not all(a.isdigit() for a in args):
                raise InstanceError("dim entries must be nonnegative integers", lineno)
            dim = dict(zip(vertices, (int(a) for a in args)))
        elif key == "matrix":
            if dim is None:
                raise InstanceError("matrix before dim", lineno)
            if quiver is None:
                field = field or QQ
                quiver = Quiver(vertices, arrows)
            if len(args) != 1 or not quiver.has_arrow(args[0]):
                raise InstanceError(f"matrix needs a declared arrow id, got {' '.join(args)!r}", lineno)
            a = quiver.arrow(args[0])
            if a.name in matrices:
                raise InstanceError(f"matrix for {a.name} given twice", lineno)
            rows, cols = dim[a.target], dim[a.source]
            data = []
            if cols:
                for _ in range(rows):
                    if pos >= len(lines):
                        raise InstanceError(f"matrix {a.name} needs {rows} rows", lineno)
                    rl, rtoks = lines[pos]
                    if len(rtoks) != cols:
                        raise InstanceError(f"matrix {a.name} row has {len(rtoks)} entries, expected {cols}", rl)
                    try:
                        data.append([field.parse(x) for x in rtoks])
                    except (FieldError, ValueError, ZeroDivisionError):
                        raise InstanceError(f"bad scalar in row {' '.join(rtoks)!r}", rl) from None
                    pos += 1
            else:
                data = [[] for _ in range(rows)]
            matrices[a.name] = Matrix(data, field, cols=cols)
        elif key == "relation":
            relations.append((args, lineno))
        else:
            raise InstanceError(f"unknown keyword {key!r}", lineno)

    if quiver is None:
        if dim is None:
            raise InstanceError("missing dim line")
        field = field or QQ
        quiver = Quiver(vertices, arrows)
    missing = [a.name for a in quiver.arrows if a.name not in matrices]
    if missing:
        raise InstanceError(f"missing matrix for arrow(s) {', '.join(missing)}")
    try:
        rep = Representation(quiver, dim, matrices, field)
    except (RepresentationError, QuiverError) as exc:
        raise InstanceError(str(exc)) from None
    rels = [_parse_relation(quiver, field, toks, line) for toks, line in relations]
    failing = [k for k, rho in enumerate(rels) if not rep.evaluate(rho).is_zero()]
    return Instance(rep, rels, failing)


def read(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def format_instance(inst: Instance) -> str:
    """Canonical text; ``parse(format_instance(x))`` reproduces x."""
    rep = inst.rep
    q = rep.quiver
    out = [f"vertex {v}" for v in q.vertices]
    out += [f"arrow {a.name} {a.source} {a.target}" for a in q.arrows]
    out.append("field Q" if rep.field == QQ else f"field F {rep.field.p}")
    out.append("dim " + " ".join(str(rep.dim[v]) for v in q.vertices))
    for a in q.arrows:
        out.append(f"matrix {a.name}")
        m = rep[a.name]
        if m.cols:
            out += [" ".join(rep.field.format(x) for x in row) for row in m.tolist()]
    out += [f"relation {format_element(rho)}" for rho in inst.relations]
    return "\n".join(out) + "\n"


def format_matrix(m: Matrix) -> str:
    return "[" + ", ".join("[" + ", ".join(m.field.format(x) for x in row) + "]" for row in m.tolist()) + "]"

