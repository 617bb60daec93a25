"""The regularity verdict for orbit closures.

For a representation N whose annihilator is admissible, the orbit closure is
a regular variety exactly when kQ/Ann(N) is hereditary (Ann(N) = 0 on an
acyclic quiver) and N has no self-extensions.  Inputs are first brought to
that situation by :func:`arrow_reduce`, and everything is recomputed on the
reduced presentation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .annihilator import ArrowReduction, annihilator, arrow_reduce, is_admissible, is_zero_ideal
from .ext import ext1, orbit_dim
from .quiver import Quiver, is_acyclic
from .representation import Representation, is_nilpotent


class Verdict(enum.Enum):
    REGULAR = "Regular"
    NOT_REGULAR = "NotRegular"
    UNSUPPORTED = "Unsupported"

    def __str__(self):
        return self.value


class Reason(enum.Enum):
    OK = "ok"
    EXT_NONZERO = "ext-nonzero"
    ANNIHILATOR_NONZERO = "annihilator-nonzero"
    CYCLIC_NONBASIC = "cyclic-nonbasic"

    def __str__(self):
        return self.value


@dataclass
class RegularityReport:
    verdict: Verdict
    reason: Reason
    reduced_quiver: Quiver
    ann_is_zero: bool
    acyclic: bool
    hereditary: bool
    # None when not computed (non-hereditary or unsupported inputs)
    dim_ext1_reduced: Optional[int]
    orbit_dim: Optional[int]
    codim: Optional[int]
    reduction: Optional[ArrowReduction] = None
    reduced: Optional[Representation] = None

    def lines(self) -> list[str]:
        def fmt(x):
            if x is None:
                return "n/a"
            if isinstance(x, bool):
                return str(x).lower()
            return str(x)

        q = self.reduced_quiver
        return [
            f"verdict = {self.verdict}",
            f"reason = {self.reason}",
            f"reduced_vertices = {' '.join(q.vertices) or 'none'}",
            f"reduced_arrows = {' '.join(f'{a.name}:{a.source}->{a.target}' for a in q.arrows) or 'none'}",
            f"ann_is_zero = {fmt(self.ann_is_zero)}",
            f"acyclic = {fmt(self.acyclic)}",
            f"hereditary = {fmt(self.hereditary)}",
            f"dim_ext1_reduced = {fmt(self.dim_ext1_reduced)}",
            f"orbit_dim = {fmt(self.orbit_dim)}",
            f"codim = {fmt(self.codim)}",
        ]


def verdict(n: Representation) -> RegularityReport:
    acyclic = is_acyclic(n.quiver)
    if not acyclic and not is_nilpotent(n):
        return RegularityReport(
            Verdict.UNSUPPORTED, Reason.CYCLIC_NONBASIC, n.quiver, False, False, False, None, None, None
        )
    reduced, red = arrow_reduce(n)
    q = reduced.quiver
    acyclic = is_acyclic(q)
    if not red.complete:
        return RegularityReport(
            Verdict.UNSUPPORTED, Reason.CYCLIC_NONBASIC, q, False, acyclic, False, None, None, None, red, reduced
        )
    ann = annihilator(reduced)
    if not is_admissible(ann):
        # a complete reduction always leaves an admissible annihilator
        raise AssertionError("reduced annihilator is not admissible")
    ann_zero = is_zero_ideal(ann)
    hereditary = ann_zero and acyclic
    odim = orbit_dim(reduced)
    if not hereditary:
        return RegularityReport(
            Verdict.NOT_REGULAR, Reason.ANNIHILATOR_NONZERO, q, ann_zero, acyclic, False, None, odim,
            reduced.ambient_dim - odim, red, reduced,
        )
    rep = ext1(reduced)
    codim = reduced.ambient_dim - odim
    if rep.dim_ext1:
        return RegularityReport(
            Verdict.NOT_REGULAR, Reason.EXT_NONZERO, q, True, True, True, rep.dim_ext1, odim, codim, red, reduced
        )
    return RegularityReport(Verdict.REGULAR, Reason.OK, q, True, True, True, 0, odim, codim, red, reduced)
