"""Command line front end.

Reports are ``key = value`` lines on stdout; warnings go to stderr.
Exit codes: 0 success, 2 input error, 3 unsupported input, 4 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .annihilator import AnnihilatorError, annihilator, arrow_reduce, is_admissible, is_zero_ideal
from .degeneration import DegenerationError, DegenerationSpec, degenerate
from .ext import ExtError, ext1, orbit_dim
from .grading import GradingError, multidegree, path_monomial_factor, zero_degree_monomials
from .groebner import DEFAULT_BUDGET, ResourceBoundExceeded
from .instance import Instance, InstanceError, format_matrix, read
from .oracle import DEFAULT_MAX_VARS, OracleError, run_oracle
from .quiver import QuiverError, format_element, is_acyclic
from .regularity import Verdict, verdict
from .representation import is_nilpotent

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3
EXIT_RESOURCE = 4


class UsageError(ValueError):
    pass


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _join(items) -> str:
    items = list(items)
    return " ".join(items) if items else "none"


def _vector(field, vec) -> str:
    return "(" + ", ".join(field.format(x) for x in vec) + ")"


def cmd_check(inst: Instance, args) -> tuple[int, list[str]]:
    rep = inst.rep
    q = rep.quiver
    lines = [
        f"vertices = {_join(q.vertices)}",
        f"arrows = {_join(f'{a.name}:{a.source}->{a.target}' for a in q.arrows)}",
        f"field = {rep.field}",
        f"dim = {' '.join(str(rep.dim[v]) for v in q.vertices)}",
        f"total_dim = {rep.total_dim}",
        f"ambient_dim = {rep.ambient_dim}",
        f"acyclic = {_bool(is_acyclic(q))}",
        f"nilpotent = {_bool(is_nilpotent(rep))}",
        f"relations = {len(inst.relations)}",
        f"relations_vanish = {_bool(not inst.failing_relations)}",
    ]
    return EXIT_OK, lines


def cmd_ann(inst: Instance, args) -> tuple[int, list[str]]:
    rep = inst.rep
    try:
        ann = annihilator(rep)
    except AnnihilatorError as exc:
        return EXIT_UNSUPPORTED, ["supported = false", f"reason = {exc}"]
    q = rep.quiver
    lines = [
        "supported = true",
        f"truncation_degree = {ann.truncation_degree}",
        f"nilpotent = {_bool(ann.nilpotent)}",
        f"acyclic = {_bool(ann.acyclic)}",
        f"admissible = {_bool(is_admissible(ann))}",
        f"zero = {_bool(is_zero_ideal(ann))}",
    ]
    for (i, j, ell) in sorted(ann.path_counts, key=ann._sort):
        if ann.path_counts[(i, j, ell)]:
            lines.append(f"graded_dim.{i}.{j}.{ell} = {ann.graded_dim(i, j, ell)} of {ann.path_counts[(i, j, ell)]}")
    for k, rho in enumerate(ann.elements(), 1):
        lines.append(f"element.{k} = {format_element(rho)}")
    for i in q.vertices:
        for j in q.vertices:
            for k, rho in enumerate(ann.joint.get((i, j), []), 1):
                if len(rho.lengths()) > 1:
                    lines.append(f"mixed.{i}.{j}.{k} = {format_element(rho)}")
    reduced, red = arrow_reduce(rep)
    lines.append(f"reduction.complete = {_bool(red.complete)}")
    lines.append(f"reduction.removed_vertices = {_join(red.removed_vertices)}")
    lines.append(f"reduction.deleted = {_join(s.deleted for s in red.steps)}")
    for name in (a.name for a in q.arrows):
        expr = red.arrow_map[name]
        lines.append(f"arrow_map.{name} = {'n/a' if expr is None else format_element(expr)}")
    lines.append(f"reduced_arrows = {_join(f'{a.name}:{a.source}->{a.target}' for a in reduced.quiver.arrows)}")
    return EXIT_OK, lines


def cmd_ext(inst: Instance, args) -> tuple[int, list[str]]:
    """Path-algebra dimensions, plus the bound algebra when the file has usable relations."""
    rep = inst.rep
    if args.bound and inst.failing_relations:
        raise UsageError(inst.warnings()[0])
    sections = [("path", ())]
    if inst.relations and not inst.failing_relations:
        sections.append(("bound", tuple(inst.relations)))
    elif args.bound:
        sections.append(("bound", ()))
    lines = []
    for name, relations in sections:
        rpt = ext1(rep, relations)
        lines += [
            f"{name}.relations_used = {len(relations)}",
            f"{name}.dim_hom = {rpt.dim_hom}",
            f"{name}.dim_coboundaries = {rpt.dim_coboundaries}",
            f"{name}.dim_cocycles = {rpt.dim_cocycles}",
            f"{name}.dim_ext1 = {rpt.dim_ext1}",
        ]
    odim = orbit_dim(rep)
    lines += [f"orbit_dim = {odim}", f"codim = {rep.ambient_dim - odim}"]
    return EXIT_OK, lines


def cmd_verdict(inst: Instance, args) -> tuple[int, list[str]]:
    report = verdict(inst.rep)
    code = EXIT_UNSUPPORTED if report.verdict is Verdict.UNSUPPORTED else EXIT_OK
    return code, report.lines()


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def cmd_degenerate(inst: Instance, args) -> tuple[int, list[str]]:
    rep = inst.rep
    weights = _parse_ints(args.weights) if args.weights else None
    try:
        spec = DegenerationSpec.for_representation(rep, weights)
        deg = degenerate(rep, spec)
    except DegenerationError as exc:
        raise UsageError(str(exc)) from None
    field = rep.field
    lines = [
        "flag = " + " ".join(f"{fv.vertex}:{_vector(field, fv.vector)}" for fv in spec.flag),
        "weights = " + ",".join(str(w) for w in spec.weights),
    ]
    for a in rep.quiver.arrows:
        tab = deg.table[a.name]
        if not tab:
            lines.append(f"curve.{a.name} = 0")
        for e, m in tab.items():
            lines.append(f"curve.{a.name}.t^{e} = {format_matrix(m)}")
    for a in rep.quiver.arrows:
        lines.append(f"limit.{a.name} = {format_matrix(deg.limit[a.name])}")
    tangent = deg.tangent
    for a in rep.quiver.arrows:
        lines.append(f"tangent.{a.name} = {format_matrix(tangent[a.name])}")
    return EXIT_OK, lines


def cmd_oracle(inst: Instance, args) -> tuple[int, list[str]]:
    try:
        rpt = run_oracle(inst.rep, args.budget, args.max_vars, args.mirror_prime)
    except OracleError as exc:
        raise UsageError(str(exc)) from None
    lines = [
        f"field = {rpt.field}",
        f"variables = {_join(rpt.variables)}",
        f"num_generators = {len(rpt.generators)}",
    ]
    lines += [f"generator.{k} = {g.to_str()}" for k, g in enumerate(rpt.generators, 1)]
    lines += [
        f"ambient_dim = {rpt.ambient_dim}",
        f"closure_dim = {rpt.closure_dim}",
        f"jacobian_rank_at_zero = {rpt.jacobian_rank_at_zero}",
        f"smooth_at_zero = {'n/a' if rpt.smooth_at_zero is None else _bool(rpt.smooth_at_zero)}",
        f"homogeneous = {_bool(rpt.homogeneous)}",
    ]
    return EXIT_OK, lines


def parse_monomial(text: str) -> list:
    """``X_b_1_2*X_a_2_1^3`` -> [(("b", 1, 2), 1), (("a", 2, 1), 3)]; ``1`` is the empty monomial."""
    text = text.strip()
    if text == "1":
        return []
    out = []
    for factor in text.split("*"):
        base, _, exp = factor.partition("^")
        if not base.startswith("X_"):
            raise UsageError(f"bad monomial factor {factor!r}; expected X_<arrow>_<p>_<q>[^k]")
        parts = base[2:].rsplit("_", 2)
        try:
            arrow, p, q = parts[0], int(parts[1]), int(parts[2])
            k = int(exp) if exp else 1
        except (IndexError, ValueError):
            raise UsageError(f"bad monomial factor {factor!r}") from None
        if k < 0:
            raise UsageError("negative exponent")
        out.append(((arrow, p, q), k))
    return out


def _format_degree(deg: dict) -> str:
    if not deg:
        return "0"
    parts = []
    for k, ((i, p), v) in enumerate(deg.items()):
        coeff = "" if abs(v) == 1 else f"{abs(v)}"
        term = f"{coeff}e({i},{p})"
        if k == 0:
            parts.append(term if v > 0 else f"-{term}")
        else:
            parts.append(f"{'+' if v > 0 else '-'} {term}")
    return " ".join(parts)


def _format_monomial(mono) -> str:
    if not mono:
        return "1"
    return "*".join(f"X_{a}_{p}_{q}" + (f"^{k}" if k != 1 else "") for (a, p, q), k in mono)


def cmd_grade(inst: Instance, args) -> tuple[int, list[str]]:
    rep = inst.rep
    lines = []
    if args.monomial is not None:
        mono = parse_monomial(args.monomial)
        try:
            deg = multidegree(rep.quiver, rep.dim, mono)
        except (GradingError, QuiverError) as exc:
            raise UsageError(str(exc)) from None
        lines += [
            f"monomial = {_format_monomial(mono)}",
            f"total_degree = {sum(k for _, k in mono)}",
            f"multidegree = {_format_degree(deg)}",
        ]
        if sorted(deg.values()) == [-1, 1]:
            fac = path_monomial_factor(rep.quiver, rep.dim, mono, deg)
            if fac is None:
                lines.append("path_factor = none")
            else:
                lines += [
                    f"path_factor = {fac.path}",
                    f"path_indices = {' '.join(str(i) for i in fac.indices)}",
                    f"residual = {_format_monomial(fac.residual)}",
                ]
    if args.zero_degree is not None:
        monos = zero_degree_monomials(rep.quiver, rep.dim, args.zero_degree)
        lines.append(f"zero_degree.bound = {args.zero_degree}")
        lines.append(f"zero_degree.count = {len(monos)}")
        lines += [f"zero_degree.{k} = {_format_monomial(m)}" for k, m in enumerate(monos, 1)]
    if not lines:
        raise UsageError("grade needs --monomial and/or --zero-degree")
    return EXIT_OK, lines


COMMANDS = {
    "check": cmd_check,
    "ann": cmd_ann,
    "ext": cmd_ext,
    "verdict": cmd_verdict,
    "degenerate": cmd_degenerate,
    "oracle": cmd_oracle,
    "grade": cmd_grade,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbitclosure", description="Regularity of orbit closures of quiver representations.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("file", help="instance file")
        if name == "ext":
            p.add_argument("--bound", action="store_true", help="use the file's relations (bound quiver algebra)")
        elif name == "degenerate":
            p.add_argument("--weights", help="comma-separated strictly decreasing weights, one per flag vector")
        elif name == "oracle":
            p.add_argument("--mirror-prime", type=int, default=None, help="run over F_p instead of Q")
            p.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)
            p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="reduction step limit")
        elif name == "grade":
            p.add_argument("--monomial", help="e.g. X_b_1_2*X_a_2_1")
            p.add_argument("--zero-degree", type=int, default=None, metavar="BOUND",
                           help="list degree-zero monomials up to this total degree")
    return parser


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(list(argv))
    try:
        inst = read(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except InstanceError as exc:
        print(f"error: {args.file}: {exc}", file=err)
        return EXIT_INPUT
    for w in inst.warnings():
        print(f"warning: {w}", file=err)
    try:
        code, lines = COMMANDS[args.command](inst, args)
    except (UsageError, ExtError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except ResourceBoundExceeded as exc:
        print(f"error: {exc}", file=err)
        if args.command == "oracle" and not args.mirror_prime:
            print("hint: try --mirror-prime 32003 for a faster plausibility run, or raise --budget/--max-vars", file=err)
        return EXIT_RESOURCE
    for line in lines:
        print(line, file=out)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
