"""Invariants of Shimura curves X^D and their Atkin-Lehner quotients."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import prod

from ..constants import LARGEST_CLASS_NUMBER_ONE_LEVEL, SMALLEST_SHIMURA_DISCRIMINANT
from ..exceptions import (
    IntegralityViolation,
    InvalidDiscriminantError,
    InvalidParameterError,
    InvalidProbabilityError,
    NotExactDivisorError,
    NotSquarefreeError,
)
from ..helpers import exact_integer
from ..logging import _LOGGER
from ..ntheory import (
    Discriminant,
    class_number,
    factor_squarefree,
    field_class_number,
    is_prime,
    kronecker,
)


@dataclass(frozen=True)
class ShimuraDescriptor:
    """
    A quaternion discriminant D with an optional designated prime q.

    |  D: squarefree, with an even number >= 2 of prime factors.
    |  q: a prime divisor of D, or None.
    """

    D: int  # pylint: disable=invalid-name
    q: int | None = None
    factors: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        """Validate D and q."""
        try:
            factors = factor_squarefree(self.D)
        except NotSquarefreeError as err:
            raise InvalidDiscriminantError(f"D = {self.D} is not squarefree") from err
        if len(factors) < 2 or len(factors) % 2:
            raise InvalidDiscriminantError(
                f"D = {self.D} needs an even number >= 2 of prime factors"
            )
        if self.q is not None and self.q not in factors:
            raise InvalidDiscriminantError(f"q = {self.q} does not divide D = {self.D}")
        object.__setattr__(self, "factors", tuple(factors))

    @classmethod
    def from_primes(cls, q: int, rest: list[int]) -> ShimuraDescriptor:
        """Return the descriptor of D = q * prod(rest) with q designated."""
        primes = [q, *rest]
        if any(not is_prime(p) for p in primes) or len(set(primes)) != len(primes):
            raise InvalidDiscriminantError(f"{primes} are not distinct primes")
        return cls(prod(primes), q)

    def with_q(self, q: int) -> ShimuraDescriptor:
        """Return the same D with q designated."""
        return ShimuraDescriptor(self.D, q)

    def exact_divisors(self) -> list[int]:
        """Return every m > 1 with m || D, ascending."""
        return sorted(
            prod(subset)
            for size in range(1, len(self.factors) + 1)
            for subset in combinations(self.factors, size)
        )

    def __str__(self):
        """Return a string representation of the descriptor."""
        if self.q is None:
            return f"X^{self.D}"
        return f"X^{self.D} (q = {self.q})"


@dataclass(frozen=True)
class ShimuraInvariants:
    """Genus, elliptic points and Atkin-Lehner data of X^D."""

    D: int  # pylint: disable=invalid-name
    q: int | None
    genus_xd: int
    e2: int
    e3: int
    al_fixed: dict[int, int]
    genus_xd_plus: int
    genus_klein: int | None
    genus_full_quotient: int

    def to_dict(self) -> dict:
        """Return the invariants keyed by field name."""
        return dict(self.__dict__)


@dataclass(frozen=True)
class AdmissibilityReport:
    """Outcome of the admissibility test for (q, p_2, ..., p_2r)."""

    q: int
    rest: tuple[int, ...]
    q_large: bool
    legendre_ok: bool
    legendre_minus_ok: bool
    fixed_points_exist: bool
    no_rational_fixed: bool
    quotient_finite: bool
    fixed_points: int
    klein_genus: int

    @property
    def admissible(self) -> bool:
        """Return True iff every computed condition holds."""
        return (
            self.q_large
            and self.fixed_points_exist
            and self.no_rational_fixed
            and self.quotient_finite
        )

    @property
    def literal_condition_diverges(self) -> bool:
        """Return True iff the (q|p_i) test disagrees with the fixed-point count."""
        return self.legendre_ok != self.fixed_points_exist

    def to_dict(self) -> dict:
        """Return the report with its derived flags."""
        return {
            **self.__dict__,
            "admissible": self.admissible,
            "literal_condition_diverges": self.literal_condition_diverges,
        }


def _as_descriptor(desc: ShimuraDescriptor | int) -> ShimuraDescriptor:
    """Coerce an integer D to a descriptor."""
    return desc if isinstance(desc, ShimuraDescriptor) else ShimuraDescriptor(desc)


def _elliptic_counts(desc: ShimuraDescriptor) -> tuple[int, int, int]:
    """Return (phi(D), e2, e3) of X^D."""
    phi = prod(p - 1 for p in desc.factors)
    e2 = prod(1 - kronecker(-4, p) for p in desc.factors)
    e3 = prod(1 - kronecker(-3, p) for p in desc.factors)
    return phi, e2, e3


def xd_genus(desc: ShimuraDescriptor | int) -> int:
    """Return the genus of X^D."""
    desc = _as_descriptor(desc)
    phi, e2, e3 = _elliptic_counts(desc)
    genus = 1 + Fraction(phi, 12) - Fraction(e2, 4) - Fraction(e3, 3)
    return exact_integer(genus, f"genus(X^{desc.D})")


def _cm_discriminants(m: int) -> list[int]:
    """Return the discriminants of the CM points fixed by w_m."""
    discs = [-4 * m]
    if m % 4 == 3:
        discs.append(-m)
    if m == 2:
        discs.append(-4)
    return discs


def _local_factor(disc: int, p: int) -> int:
    """Count optimal embeddings at a ramified prime p of the algebra."""
    if Discriminant(disc).conductor % p == 0:
        return 0
    return 1 - kronecker(disc, p)


def al_fixed_count(desc: ShimuraDescriptor | int, m: int) -> int:
    """
    Return the number of fixed points of w_m on X^D.

    Sums h(d) over the discriminants d of CM points fixed by w_m, weighted
    by the embedding counts at the primes dividing D/m.
    """
    desc = _as_descriptor(desc)
    if m <= 1 or desc.D % m:
        raise NotExactDivisorError(f"{m} is not an exact divisor > 1 of {desc.D}")
    cofactors = factor_squarefree(desc.D // m)
    return sum(
        class_number(disc) * prod(_local_factor(disc, p) for p in cofactors)
        for disc in _cm_discriminants(m)
    )


def xd_plus_genus(desc: ShimuraDescriptor | int) -> int:
    """Return the genus of X^{D+} = X^D / w_D."""
    desc = _as_descriptor(desc)
    genus = xd_genus(desc)
    fixed = al_fixed_count(desc, desc.D)
    return exact_integer(Fraction(2 * genus + 2 - fixed, 4), f"genus(X^{desc.D}+)")


def _require_q(desc: ShimuraDescriptor) -> int:
    """Return the designated prime of desc."""
    if desc.q is None:
        raise InvalidParameterError(f"{desc} has no designated prime q")
    return desc.q


def klein_quotient_genus(desc: ShimuraDescriptor) -> int:
    """Return the genus of X^D / <w_D, w_q>."""
    q = _require_q(desc)
    genus = xd_genus(desc)
    fixed = sum(al_fixed_count(desc, m) for m in (q, desc.D // q, desc.D))
    return exact_integer(
        Fraction(2 * genus + 6 - fixed, 8), f"genus(X^{desc.D}/<w_D, w_{q}>)"
    )


def full_quotient_genus(desc: ShimuraDescriptor | int) -> int:
    """Return the genus of X^D modulo its full Atkin-Lehner group."""
    desc = _as_descriptor(desc)
    order = 2 ** len(desc.factors)
    fixed = sum(al_fixed_count(desc, m) for m in desc.exact_divisors())
    genus = Fraction(2 * xd_genus(desc) - 2 - fixed + 2 * order, 2 * order)
    return exact_integer(genus, f"genus(X^{desc.D}/W)")


def shimura_invariants(desc: ShimuraDescriptor | int) -> ShimuraInvariants:
    """Return every ShimuraInvariants field, cross-checking the identities."""
    desc = _as_descriptor(desc)
    phi, e2, e3 = _elliptic_counts(desc)
    genus = xd_genus(desc)
    al_fixed = {m: al_fixed_count(desc, m) for m in desc.exact_divisors()}
    genus_plus = xd_plus_genus(desc)
    genus_klein = klein_quotient_genus(desc) if desc.q is not None else None

    if 12 * (genus - 1) + 3 * e2 + 4 * e3 != phi:
        raise IntegralityViolation(f"Elliptic point identity fails for X^{desc.D}")
    if any(count % 2 for count in al_fixed.values()):
        raise IntegralityViolation(f"Odd fixed-point count on X^{desc.D}: {al_fixed}")
    if 2 * genus - 2 != 2 * (2 * genus_plus - 2) + al_fixed[desc.D]:
        raise IntegralityViolation(f"Riemann-Hurwitz fails for X^{desc.D}+")
    if genus_klein is not None:
        fixed = al_fixed[desc.q] + al_fixed[desc.D // desc.q] + al_fixed[desc.D]
        if 2 * genus - 2 != 4 * (2 * genus_klein - 2) + fixed:
            raise IntegralityViolation(f"Riemann-Hurwitz fails for {desc}")

    return ShimuraInvariants(
        D=desc.D,
        q=desc.q,
        genus_xd=genus,
        e2=e2,
        e3=e3,
        al_fixed=al_fixed,
        genus_xd_plus=genus_plus,
        genus_klein=genus_klein,
        genus_full_quotient=full_quotient_genus(desc),
    )


def shimura_admissible(q: int, rest: list[int]) -> AdmissibilityReport:
    """
    Test whether D = q * p_2 * ... * p_2r meets the twist requirements for w_q.

    Both (q|p_i) and (-q|p_i) are reported; admissibility is decided by the
    computed fixed-point count of w_q.
    """
    if len(rest) % 2 == 0:
        raise InvalidDiscriminantError(f"Need an odd number of primes besides q, got {rest}")
    desc = ShimuraDescriptor.from_primes(q, rest)
    fixed = al_fixed_count(desc, q)
    klein = klein_quotient_genus(desc)
    report = AdmissibilityReport(
        q=q,
        rest=tuple(rest),
        q_large=q > LARGEST_CLASS_NUMBER_ONE_LEVEL,
        legendre_ok=all(kronecker(q, p) != 1 for p in rest),
        legendre_minus_ok=all(kronecker(-q, p) != 1 for p in rest),
        fixed_points_exist=fixed > 0,
        no_rational_fixed=field_class_number(q) >= 2,
        quotient_finite=klein >= 2,
        fixed_points=fixed,
        klein_genus=klein,
    )
    if report.literal_condition_diverges:
        _LOGGER.warning(
            "For %s the condition (q|p_i) != 1 is %s but w_q has %d fixed points",
            desc,
            report.legendre_ok,
            fixed,
        )
    return report


def valid_shimura_discriminants(lo: int, hi: int) -> list[int]:
    """Return the squarefree D in [lo, hi] with an even number >= 2 of primes."""
    found = []
    for value in range(max(lo, SMALLEST_SHIMURA_DISCRIMINANT), hi + 1):
        try:
            ShimuraDescriptor(value)
        except InvalidDiscriminantError:
            continue
        found.append(value)
    return found


def scan_d0(limit: int) -> int:
    """
    Return the largest D <= limit with some q | D and genus(X^D/<w_D, w_q>) <= 1.

    An empirical lower bound for the discriminant beyond which every Klein
    quotient has genus at least 2.
    """
    if limit < SMALLEST_SHIMURA_DISCRIMINANT:
        raise InvalidParameterError(f"scan_d0 needs limit >= 6, got {limit}")
    for value in reversed(valid_shimura_discriminants(SMALLEST_SHIMURA_DISCRIMINANT, limit)):
        desc = ShimuraDescriptor(value)
        if any(klein_quotient_genus(desc.with_q(q)) <= 1 for q in desc.factors):
            _LOGGER.debug("Largest low-genus Klein quotient up to %d: D = %d", limit, value)
            return value
    raise InvalidParameterError(f"No low-genus Klein quotient up to {limit}")


def cm_density_heuristic(trials: int, num: int, den: int) -> Fraction:
    """Return 1 - (1 - num/den)**trials, the chance of at least one success."""
    if den <= 0 or not 0 <= num <= den:
        raise InvalidProbabilityError(f"{num}/{den} is not a probability")
    if trials < 0:
        raise InvalidParameterError(f"trials must be >= 0, got {trials}")
    return 1 - (1 - Fraction(num, den)) ** trials
