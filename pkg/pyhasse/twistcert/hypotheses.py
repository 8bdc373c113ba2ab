"""The four hypotheses a (curve, involution) pair needs for twisting."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..constants import HYPOTHESIS_ITEMS, LARGEST_CLASS_NUMBER_ONE_LEVEL
from ..curves import min_fixed_degree
from ..exceptions import HypothesisFailure
from ..logging import _LOGGER
from ..ntheory import field_class_number
from .descriptor import CurveDescriptor, CurveKind


class LocalPoints(Enum):
    """How points everywhere locally on C are known."""

    PROVEN_CUSPS = "ProvenCusps"
    CITED_FACT = "CitedFact"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class HypothesisReport:
    """
    Verdict on hypotheses h1 to h4.

    |  h1: no rational point is fixed by the involution.
    |  h2: the involution has geometric fixed points.
    |  h3: C has points everywhere locally.
    |  h4: C / iota has finitely many rational points (genus >= 2).
    """

    h1_no_rational_fixed: bool
    h1_justification: str
    h2_geometric_fixed: bool
    h3_local_points: LocalPoints
    h4_quotient_finite: bool
    genus: int
    quotient_genus: int
    fixed_points: int
    cm_class_number: int
    genus_consistent: bool

    def failures(self) -> tuple[str, ...]:
        """Return the names of the failing hypotheses."""
        held = (
            self.h1_no_rational_fixed,
            self.h2_geometric_fixed,
            self.h3_local_points is not LocalPoints.UNKNOWN,
            self.h4_quotient_finite,
        )
        return tuple(item for item, ok in zip(HYPOTHESIS_ITEMS, held) if not ok)

    @property
    def passed(self) -> bool:
        """Return True iff all four hypotheses hold."""
        return not self.failures()

    def to_dict(self) -> dict:
        """Return the report with its failure list."""
        return {**self.__dict__, "failures": list(self.failures())}


def necessary_genus_condition(genus: int, quotient_genus: int) -> bool:
    """Return True iff g(C) >= 2 and g(C/iota) >= 1, required by h3 and h4 together."""
    return genus >= 2 and quotient_genus >= 1


def check_hypotheses(desc: CurveDescriptor) -> HypothesisReport:
    """Evaluate h1 to h4 for desc."""
    genus = desc.genus()
    quotient_genus = desc.quotient_genus()
    fixed = desc.fixed_points()

    if desc.kind is CurveKind.X0N:
        degree = min_fixed_degree(desc.level)
        h1_ok = degree >= 2
        justification = (
            f"min degree of a w_N-fixed point = h(Q(sqrt(-{desc.level}))) = {degree}"
        )
        local = LocalPoints.PROVEN_CUSPS
    else:
        q = desc.shimura.q
        degree = field_class_number(q)
        large = q > LARGEST_CLASS_NUMBER_ONE_LEVEL
        h1_ok = degree >= 2 and large
        justification = f"h(Q(sqrt(-{q}))) = {degree}; q > 163 is {large}"
        local = LocalPoints.CITED_FACT

    report = HypothesisReport(
        h1_no_rational_fixed=h1_ok,
        h1_justification=justification,
        h2_geometric_fixed=fixed > 0,
        h3_local_points=local,
        h4_quotient_finite=quotient_genus >= 2,
        genus=genus,
        quotient_genus=quotient_genus,
        fixed_points=fixed,
        cm_class_number=degree,
        genus_consistent=necessary_genus_condition(genus, quotient_genus),
    )
    _LOGGER.info("Hypotheses for %s: %s", desc, report.failures() or "all hold")
    return report


def require_hypotheses(desc: CurveDescriptor) -> HypothesisReport:
    """Return the report for desc, raising HypothesisFailure if any item fails."""
    report = check_hypotheses(desc)
    if failures := report.failures():
        raise HypothesisFailure(failures, report)
    return report
