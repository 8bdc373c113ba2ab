"""Invariants of the modular curves X0(N) and X0+(N) for squarefree N."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from ..exceptions import IntegralityViolation, InvalidParameterError
from ..helpers import exact_integer
from ..logging import _LOGGER
from ..ntheory import (
    class_number,
    factor_squarefree,
    field_class_number,
    is_squarefree,
    kronecker,
)


@dataclass(frozen=True)
class X0Invariants:
    """
    Arithmetic invariants of X0(N).

    |  genus: genus of X0(N), shared by every twist C(N, p).
    |  nu2, nu3: elliptic points of order 2 and 3.
    |  nu_inf: number of cusps.
    |  wn_fixed: fixed points of w_N over the algebraic closure.
    |  genus_plus: genus of X0+(N) = X0(N)/w_N.
    |  min_fixed_degree: least [Q(P):Q] over the w_N-fixed points P.
    """

    N: int  # pylint: disable=invalid-name
    genus: int
    nu2: int
    nu3: int
    nu_inf: int
    wn_fixed: int
    genus_plus: int
    min_fixed_degree: int

    def to_dict(self) -> dict:
        """Return the invariants keyed by field name."""
        return dict(self.__dict__)


def _require_involution_level(level: int) -> list[int]:
    """Factor a level that carries a nontrivial w_N."""
    if level < 2:
        raise InvalidParameterError(f"w_N needs N >= 2, got {level}")
    return factor_squarefree(level)


def _elliptic_counts(factors: list[int]) -> tuple[int, int, int, int]:
    """Return (mu, nu2, nu3, nu_inf) of X0(N)."""
    mu = prod(p + 1 for p in factors)
    nu2 = prod(1 + kronecker(-4, p) for p in factors)
    nu3 = prod(1 + kronecker(-3, p) for p in factors)
    return mu, nu2, nu3, 2 ** len(factors)


def x0_genus(level: int) -> int:
    """Return the genus of X0(N) for squarefree N >= 1."""
    mu, nu2, nu3, nu_inf = _elliptic_counts(factor_squarefree(level))
    genus = 1 + Fraction(mu, 12) - Fraction(nu2, 4) - Fraction(nu3, 3) - Fraction(nu_inf, 2)
    return exact_integer(genus, f"genus(X0({level}))")


def wn_fixed_count(level: int) -> int:
    """
    Return the number of fixed points of w_N on X0(N).

    CM points by discriminant -4N, by -N when N = 3 mod 4, and by -4 when
    N = 2.
    """
    _require_involution_level(level)
    count = class_number(-4 * level)
    if level % 4 == 3:
        count += class_number(-level)
    if level == 2:
        count += class_number(-4)
    return count


def x0_plus_genus(level: int) -> int:
    """Return the genus of X0+(N) by Riemann-Hurwitz."""
    genus = x0_genus(level)
    fixed = wn_fixed_count(level)
    return exact_integer(Fraction(2 * genus + 2 - fixed, 4), f"genus(X0+({level}))")


def min_fixed_degree(level: int) -> int:
    """Return the least degree of a w_N-fixed point, h(Q(sqrt(-N)))."""
    _require_involution_level(level)
    return field_class_number(level)


def x0_invariants(level: int) -> X0Invariants:
    """Return every X0Invariants field for N, cross-checking both identities."""
    factors = _require_involution_level(level)
    mu, nu2, nu3, nu_inf = _elliptic_counts(factors)
    genus = x0_genus(level)
    fixed = wn_fixed_count(level)
    genus_plus = x0_plus_genus(level)

    if 12 * (genus - 1) + 3 * nu2 + 4 * nu3 + 6 * nu_inf != mu:
        raise IntegralityViolation(f"Elliptic point identity fails for X0({level})")
    if fixed % 2 or 2 * genus - 2 != 2 * (2 * genus_plus - 2) + fixed:
        raise IntegralityViolation(f"Riemann-Hurwitz fails for X0({level})")

    return X0Invariants(
        N=level,
        genus=genus,
        nu2=nu2,
        nu3=nu3,
        nu_inf=nu_inf,
        wn_fixed=fixed,
        genus_plus=genus_plus,
        min_fixed_degree=field_class_number(level),
    )


def _squarefree_levels(bound: int) -> list[int]:
    """Return the squarefree N in [2, bound]."""
    if bound < 2:
        raise InvalidParameterError(f"Level scans need bound >= 2, got {bound}")
    return [level for level in range(2, bound + 1) if is_squarefree(level)]


def low_genus_plus_levels(bound: int) -> list[int]:
    """Return the squarefree N <= bound with genus(X0+(N)) <= 1."""
    levels = [level for level in _squarefree_levels(bound) if x0_plus_genus(level) <= 1]
    _LOGGER.debug("%d levels up to %d have genus(X0+) <= 1", len(levels), bound)
    return levels


def largest_low_genus_plus(bound: int) -> int:
    """Return the largest squarefree N <= bound with genus(X0+(N)) <= 1."""
    return max(low_genus_plus_levels(bound))


def class_number_one_levels(bound: int) -> list[int]:
    """Return the squarefree N <= bound with h(Q(sqrt(-N))) = 1."""
    return [level for level in _squarefree_levels(bound) if field_class_number(level) == 1]
