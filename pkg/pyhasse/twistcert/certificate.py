"""Self-verifying certificates for families of twists C_p."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..constants import (
    CAVEAT_CITED_LOCAL,
    CAVEAT_INEFFECTIVE,
    CAVEAT_INERT_READING,
    CAVEAT_SPARSE,
    CERTIFICATE_FORMAT_VERSION,
    KEY_CAVEATS,
    KEY_CONDITIONS,
    KEY_DENSITY,
    KEY_DESCRIPTOR,
    KEY_HYPOTHESES,
    KEY_PRIMES,
    KEY_VERSION,
)
from ..helpers import canonical_json
from ..logging import _LOGGER, log_duration
from .conditions import (
    ConditionTrace,
    PrimeConditionSet,
    Variant,
    build_conditions,
    density_lower_bound,
    expected_prime_count,
)
from .descriptor import CurveDescriptor, CurveKind
from .hypotheses import HypothesisReport, require_hypotheses
from .sieve import enumerate_primes


@dataclass(frozen=True)
class TwistCertificate:
    """Hypotheses, conditions, density bound and qualifying primes for one curve."""

    descriptor: CurveDescriptor
    hypotheses: HypothesisReport
    conditions: PrimeConditionSet
    density_lower_bound: Fraction
    bound: int
    primes_found: tuple[ConditionTrace, ...]
    caveats: tuple[str, ...]

    @property
    def primes(self) -> list[int]:
        """Return the listed primes."""
        return [trace.prime for trace in self.primes_found]

    def to_dict(self) -> dict:
        """Return the certificate document."""
        return {
            KEY_DESCRIPTOR: self.descriptor.to_dict(),
            KEY_HYPOTHESES: self.hypotheses.to_dict(),
            KEY_CONDITIONS: {**self.conditions.to_dict(), "bound": self.bound},
            KEY_DENSITY: self.density_lower_bound,
            KEY_PRIMES: [
                {"p": trace.prime, "trace": trace.to_dict()} for trace in self.primes_found
            ],
            KEY_CAVEATS: list(self.caveats),
            KEY_VERSION: CERTIFICATE_FORMAT_VERSION,
        }


def _caveats(
    desc: CurveDescriptor, conds: PrimeConditionSet, expected: Fraction
) -> tuple[str, ...]:
    """Return the caveats attached to a certificate."""
    caveats = [CAVEAT_INEFFECTIVE]
    if desc.kind is CurveKind.XDPLUS:
        caveats.append(CAVEAT_CITED_LOCAL)
    if conds.variant is Variant.INERT:
        caveats.append(CAVEAT_INERT_READING)
    if expected < 1:
        caveats.append(CAVEAT_SPARSE.format(expected=f"{float(expected):.3g}"))
    return tuple(caveats)


def certify(
    desc: CurveDescriptor,
    variant: Variant | str = Variant.SPLIT,
    bound: int = 10**5,
    workers: int = 1,
) -> TwistCertificate:
    """
    Build the certificate for desc up to bound.

    Raises HypothesisFailure naming the failing items.
    """
    report = require_hypotheses(desc)
    conds = build_conditions(desc, Variant(variant))
    density = density_lower_bound(conds, report.cm_class_number)
    expected = expected_prime_count(conds, bound, report.cm_class_number)
    with log_duration("Enumeration of %s up to %d", desc, bound):
        traces = enumerate_primes(conds, bound, workers=workers)
    _LOGGER.info(
        "Certified %s: density >= %s, %d primes up to %d", desc, density, len(traces), bound
    )
    return TwistCertificate(
        descriptor=desc,
        hypotheses=report,
        conditions=conds,
        density_lower_bound=density,
        bound=bound,
        primes_found=tuple(traces),
        caveats=_caveats(desc, conds, expected),
    )


def verify_certificate(cert: TwistCertificate) -> bool:
    """Re-evaluate every condition on every listed prime."""
    primes = cert.primes
    if primes != sorted(set(primes)) or any(p > cert.bound for p in primes):
        return False
    for trace in cert.primes_found:
        recomputed = cert.conditions.check(trace.prime)
        if not recomputed.passed or recomputed != trace:
            _LOGGER.warning("Certificate entry %d does not re-verify", trace.prime)
            return False
    return cert.density_lower_bound > 0


def to_json(cert: TwistCertificate) -> str:
    """Return the canonical JSON document of cert."""
    return canonical_json(cert)
