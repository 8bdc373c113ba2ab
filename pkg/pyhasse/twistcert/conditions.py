"""Prime condition sets for twists with local points and no rational points."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import sympy

from ..constants import (
    LARGEST_CLASS_NUMBER_ONE_LEVEL,
    RESIDUE_CLASS,
    RESIDUE_MODULUS,
    TRACE_ABOVE_THRESHOLD,
    TRACE_NOT_EXCLUDED,
    TRACE_PRIME,
    TRACE_QR_PREFIX,
    TRACE_RESIDUE,
    TRACE_SPLITTING,
)
from ..exceptions import (
    InternalConsistencyError,
    InvalidParameterError,
    VariantUnsupportedError,
)
from ..logging import _LOGGER
from ..ntheory import (
    is_prime,
    kronecker,
    primes_in_range,
    represented_by_principal_form,
)
from .descriptor import CurveDescriptor, CurveKind
from .hypotheses import require_hypotheses


class Variant(Enum):
    """Which Frobenius condition realizes the degree-one CM point."""

    SPLIT = "split"
    INERT = "inert"


@dataclass(frozen=True)
class PrincipalFormSplitting:
    """p splits completely in the Hilbert class field of disc."""

    disc: int

    def holds(self, p: int) -> tuple[bool, tuple[int, int] | None]:
        """Return (p is represented by the principal form, witness)."""
        if (2 * self.disc) % p == 0:
            return False, None
        return represented_by_principal_form(p, self.disc)

    def to_dict(self) -> dict:
        """Return the condition as plain data."""
        return {"kind": "PrincipalForm", "disc": self.disc}


@dataclass(frozen=True)
class InertSplitting:
    """p is inert in Q(sqrt(-N)), that is (N|p) = -1 for p = 1 mod 4."""

    level: int

    def holds(self, p: int) -> tuple[bool, None]:
        """Return ((N|p) = -1, None)."""
        return kronecker(self.level, p) == -1, None

    def to_dict(self) -> dict:
        """Return the condition as plain data."""
        return {"kind": "Inert", "N": self.level}


@dataclass(frozen=True)
class ConditionTrace:
    """Per-condition outcome for one prime."""

    prime: int
    residue_ok: bool
    above_threshold: bool
    not_excluded: bool
    quadratic_residues: tuple[tuple[int, bool], ...]
    splitting_ok: bool
    witness: tuple[int, int] | None = None

    @property
    def passed(self) -> bool:
        """Return True iff every condition holds."""
        return (
            self.residue_ok
            and self.above_threshold
            and self.not_excluded
            and self.splitting_ok
            and all(ok for _, ok in self.quadratic_residues)
        )

    def to_dict(self) -> dict:
        """Return the trace keyed by condition name."""
        trace = {
            TRACE_PRIME: self.prime,
            TRACE_RESIDUE: self.residue_ok,
            TRACE_ABOVE_THRESHOLD: self.above_threshold,
            TRACE_NOT_EXCLUDED: self.not_excluded,
            TRACE_SPLITTING: self.splitting_ok,
        }
        trace.update(
            {f"{TRACE_QR_PREFIX}{ell}": ok for ell, ok in self.quadratic_residues}
        )
        if self.witness is not None:
            trace["witness"] = list(self.witness)
        return trace


@dataclass(frozen=True)
class PrimeConditionSet:
    """
    Conditions a prime p must meet for the twist C_p.

    |  p = 1 mod 8 and p > weil_threshold_M.
    |  p is not a condition prime or a bad prime.
    |  (p|l) = 1 for every l in qr_primes.
    |  the splitting condition holds at p.
    """

    qr_primes: tuple[int, ...]
    splitting: PrincipalFormSplitting | InertSplitting
    bad_primes: tuple[int, ...]
    weil_threshold_M: int  # pylint: disable=invalid-name
    variant: Variant
    excluded: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        """Validate the set."""
        for ell in self.qr_primes:
            if ell % 2 == 0 or not is_prime(ell):
                raise InvalidParameterError(f"Condition prime {ell} is not an odd prime")
            if ell > self.weil_threshold_M and ell not in self.bad_primes:
                raise InvalidParameterError(
                    f"Condition prime {ell} exceeds M = {self.weil_threshold_M}"
                )
        if isinstance(self.splitting, InertSplitting):
            if self.variant is not Variant.INERT:
                raise InvalidParameterError("Inert splitting needs the inert variant")
            if self.splitting.level in self.qr_primes:
                raise InvalidParameterError("The inert variant excludes N from qr_primes")
        elif self.variant is not Variant.SPLIT:
            raise InvalidParameterError("Principal form splitting needs the split variant")
        object.__setattr__(
            self, "excluded", frozenset(self.qr_primes) | frozenset(self.bad_primes)
        )

    @property
    def splitting_disc(self) -> int:
        """Return the CM discriminant the splitting condition lives in."""
        if isinstance(self.splitting, InertSplitting):
            level = self.splitting.level
            return -level if level % 4 == 3 else -4 * level
        return self.splitting.disc

    @property
    def unramified_count(self) -> int:
        """Return k', the number of condition primes not dividing the CM discriminant."""
        return sum(1 for ell in self.qr_primes if self.splitting_disc % ell)

    def check(self, p: int) -> ConditionTrace:
        """Evaluate every condition at the prime p."""
        not_excluded = p not in self.excluded
        if not_excluded:
            splitting_ok, witness = self.splitting.holds(p)
        else:
            splitting_ok, witness = False, None
        return ConditionTrace(
            prime=p,
            residue_ok=p % RESIDUE_MODULUS == RESIDUE_CLASS,
            above_threshold=p > self.weil_threshold_M,
            not_excluded=not_excluded,
            quadratic_residues=tuple((ell, kronecker(p, ell) == 1) for ell in self.qr_primes),
            splitting_ok=splitting_ok,
            witness=witness,
        )

    def to_dict(self) -> dict:
        """Return the condition set as plain data."""
        return {
            "residue_mod_8": RESIDUE_CLASS,
            "qr_primes": list(self.qr_primes),
            "splitting": self.splitting.to_dict(),
            "bad_primes": list(self.bad_primes),
            "weil_threshold_M": self.weil_threshold_M,
            "variant": self.variant.value,
        }


def _weil_fails(ell: int, genus: int) -> bool:
    """Return True iff (l + 1)**2 <= 4 g**2 l."""
    return (ell + 1) ** 2 <= 4 * genus * genus * ell


def weil_threshold(genus: int) -> int:
    """
    Return the least M such that every l > M has (l + 1)**2 > 4 g**2 l.

    Above M a smooth genus g curve over F_l has a point. The quadratic
    (l + 1)**2 - 4 g**2 l changes sign just below 4 g**2 - 2.
    """
    if genus < 1:
        raise InvalidParameterError(f"weil_threshold needs g >= 1, got {genus}")
    threshold = 4 * genus * genus - 3
    if not _weil_fails(threshold, genus) or _weil_fails(threshold + 1, genus):
        raise InternalConsistencyError(f"Weil threshold {threshold} is wrong for g = {genus}")
    return threshold


def _supports_inert(desc: CurveDescriptor) -> bool:
    """Return True iff desc is X0(N) with N prime, N = 3 mod 4 and N > 163."""
    return (
        desc.kind is CurveKind.X0N
        and is_prime(desc.level)
        and desc.level % 4 == 3
        and desc.level > LARGEST_CLASS_NUMBER_ONE_LEVEL
    )


def build_conditions(
    desc: CurveDescriptor, variant: Variant = Variant.SPLIT
) -> PrimeConditionSet:
    """
    Return the prime condition set for desc.

    Split: (p|l) = 1 for every odd l <= M and p splits completely in the
    Hilbert class field of the CM field. Inert: the same residue conditions
    without N, and (N|p) = -1; the local conditions at N are automatic for
    N = 3 mod 4.

    Raises HypothesisFailure when desc fails a hypothesis and
    VariantUnsupportedError when the inert variant does not apply.
    """
    variant = Variant(variant)
    report = require_hypotheses(desc)
    if variant is Variant.INERT and not _supports_inert(desc):
        raise VariantUnsupportedError(
            f"The inert variant needs X0(N) with N prime, N = 3 mod 4 and N > 163; got {desc}"
        )

    bad_primes = desc.bad_primes
    threshold = max(weil_threshold(report.genus), max(bad_primes))
    odd_primes = primes_in_range(3, threshold) if threshold >= 3 else []

    if variant is Variant.INERT:
        conds = PrimeConditionSet(
            qr_primes=tuple(ell for ell in odd_primes if ell != desc.level),
            splitting=InertSplitting(desc.level),
            bad_primes=bad_primes,
            weil_threshold_M=threshold,
            variant=variant,
        )
    else:
        conds = PrimeConditionSet(
            qr_primes=tuple(odd_primes),
            splitting=PrincipalFormSplitting(desc.cm_discriminant),
            bad_primes=bad_primes,
            weil_threshold_M=threshold,
            variant=variant,
        )
    _LOGGER.info(
        "Built %s conditions for %s: M = %d, %d condition primes",
        variant.value,
        desc,
        threshold,
        len(conds.qr_primes),
    )
    return conds


def density_lower_bound(conds: PrimeConditionSet, class_number: int) -> Fraction:
    """
    Return a lower bound for the density of primes meeting conds.

    Split: 1 / (4 * 2**k' * 2h). Inert: 1 / (8 * 2**k'). The residue
    fields, the quadratic fields of the condition primes and the CM field
    are linearly disjoint.
    """
    if class_number < 1:
        raise InvalidParameterError(f"Class number must be >= 1, got {class_number}")
    denominator = RESIDUE_MODULUS // 2 * 2**conds.unramified_count
    if conds.variant is Variant.INERT:
        return Fraction(1, denominator * 2)
    return Fraction(1, denominator * 2 * class_number)


def expected_prime_count(conds: PrimeConditionSet, bound: int, class_number: int) -> Fraction:
    """Return density_lower_bound * pi(bound) as an exact rational."""
    return density_lower_bound(conds, class_number) * int(sympy.primepi(bound))
