"""Hypotheses, prime condition sets and certificates for twists by an involution."""
from .certificate import TwistCertificate, certify, to_json, verify_certificate
from .conditions import (
    ConditionTrace,
    InertSplitting,
    PrimeConditionSet,
    PrincipalFormSplitting,
    Variant,
    build_conditions,
    density_lower_bound,
    expected_prime_count,
    weil_threshold,
)
from .descriptor import CurveDescriptor, CurveKind
from .hypotheses import (
    HypothesisReport,
    LocalPoints,
    check_hypotheses,
    necessary_genus_condition,
    require_hypotheses,
)
from .shih import (
    LocalAtLevel,
    ShihReport,
    ShihStatus,
    level_obstruction,
    shih_classify,
    twist_parameter,
)
from .sieve import enumerate_primes

__all__ = [
    "ConditionTrace",
    "CurveDescriptor",
    "CurveKind",
    "HypothesisReport",
    "InertSplitting",
    "LocalAtLevel",
    "LocalPoints",
    "PrimeConditionSet",
    "PrincipalFormSplitting",
    "ShihReport",
    "ShihStatus",
    "TwistCertificate",
    "Variant",
    "build_conditions",
    "certify",
    "check_hypotheses",
    "density_lower_bound",
    "enumerate_primes",
    "expected_prime_count",
    "level_obstruction",
    "necessary_genus_condition",
    "require_hypotheses",
    "shih_classify",
    "to_json",
    "twist_parameter",
    "verify_certificate",
    "weil_threshold",
]
