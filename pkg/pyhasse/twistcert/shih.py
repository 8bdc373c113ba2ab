"""Classify (N, p) for Shih's PSL2(F_p) realization strategy."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..constants import SHIH_BSD_LEVELS, SHIH_SUCCESS_LEVELS
from ..curves import x0_genus
from ..exceptions import NotOddPrimeError, RamifiedPrimeError
from ..ntheory import factor_squarefree, is_prime, kronecker

# Level whose twists are tested at 5 instead of at N.
COMPOSITE_OBSTRUCTION_LEVEL = 10
COMPOSITE_OBSTRUCTION_PLACE = 5


class LocalAtLevel(Enum):
    """Local solvability of C(N, p) at N, or at 5 for N = 10."""

    OBSTRUCTED_AT_N = "ObstructedAtN"
    LOCAL_POINTS_AT_N = "LocalPointsAtN"
    OBSTRUCTED_AT_FIVE = "ObstructedAt5"
    LOCAL_POINTS_AT_FIVE = "LocalPointsAt5"


class ShihStatus(Enum):
    """Outcome of Shih's strategy for C(N, p)."""

    NOT_APPLICABLE = "NotApplicable"
    SUCCEEDS = "Succeeds"
    CONDITIONAL_ON_BSD = "ConditionalOnBSD"
    OBSTRUCTED = "Obstructed"
    OPEN = "Open"


@dataclass(frozen=True)
class ShihReport:
    """Shih's strategy applied to the twist C(N, p)."""

    N: int  # pylint: disable=invalid-name
    p: int
    twist_parameter: int
    shih_applicable: bool
    genus: int
    genus_class: int
    local_obstruction: LocalAtLevel | None
    obstruction_place: int | None
    status: ShihStatus

    def to_dict(self) -> dict:
        """Return the report as plain data."""
        return dict(self.__dict__)


def _require_odd_prime(value: int) -> None:
    """Raise NotOddPrimeError unless value is an odd prime."""
    if value < 3 or not is_prime(value):
        raise NotOddPrimeError(f"{value} is not an odd prime")


def level_obstruction(level: int) -> LocalAtLevel:
    """Return whether C(N, p)(Q_N) is empty for the odd prime N: iff N = 1 mod 4."""
    _require_odd_prime(level)
    if level % 4 == 1:
        return LocalAtLevel.OBSTRUCTED_AT_N
    return LocalAtLevel.LOCAL_POINTS_AT_N


def twist_parameter(p: int) -> int:
    """Return p* = (-1)**((p - 1)/2) * p, so C(N, p) is a twist by Q(sqrt(p*))."""
    _require_odd_prime(p)
    return p if p % 4 == 1 else -p


def shih_classify(level: int, p: int) -> ShihReport:
    """Classify the twist C(N, p) for squarefree N >= 2 and an odd prime p not dividing N."""
    factors = factor_squarefree(level)
    _require_odd_prime(p)
    if level % p == 0:
        raise RamifiedPrimeError(f"{p} divides N = {level}")

    applicable = kronecker(level, p) == -1
    genus = x0_genus(level)

    obstruction, place = None, None
    if len(factors) == 1 and level > 2:
        obstruction = level_obstruction(level)
        if obstruction is LocalAtLevel.OBSTRUCTED_AT_N:
            place = level
    elif level == COMPOSITE_OBSTRUCTION_LEVEL:
        if kronecker(COMPOSITE_OBSTRUCTION_PLACE, p) != 1:
            obstruction = LocalAtLevel.OBSTRUCTED_AT_FIVE
            place = COMPOSITE_OBSTRUCTION_PLACE
        else:
            obstruction = LocalAtLevel.LOCAL_POINTS_AT_FIVE

    if not applicable:
        status = ShihStatus.NOT_APPLICABLE
    elif place is not None:
        status = ShihStatus.OBSTRUCTED
    elif level in SHIH_SUCCESS_LEVELS:
        status = ShihStatus.SUCCEEDS
    elif level in SHIH_BSD_LEVELS and p % 4 == 1:
        status = ShihStatus.CONDITIONAL_ON_BSD
    else:
        status = ShihStatus.OPEN

    return ShihReport(
        N=level,
        p=p,
        twist_parameter=twist_parameter(p),
        shih_applicable=applicable,
        genus=genus,
        genus_class=min(genus, 2),
        local_obstruction=obstruction,
        obstruction_place=place,
        status=status,
    )
