"""Genus and fixed-point invariants of modular and Shimura curves."""
from .shimura import (
    AdmissibilityReport,
    ShimuraDescriptor,
    ShimuraInvariants,
    al_fixed_count,
    cm_density_heuristic,
    full_quotient_genus,
    klein_quotient_genus,
    scan_d0,
    shimura_admissible,
    shimura_invariants,
    valid_shimura_discriminants,
    xd_genus,
    xd_plus_genus,
)
from .x0 import (
    X0Invariants,
    class_number_one_levels,
    largest_low_genus_plus,
    low_genus_plus_levels,
    min_fixed_degree,
    wn_fixed_count,
    x0_genus,
    x0_invariants,
    x0_plus_genus,
)

__all__ = [
    "AdmissibilityReport",
    "ShimuraDescriptor",
    "ShimuraInvariants",
    "X0Invariants",
    "al_fixed_count",
    "class_number_one_levels",
    "cm_density_heuristic",
    "full_quotient_genus",
    "klein_quotient_genus",
    "largest_low_genus_plus",
    "low_genus_plus_levels",
    "min_fixed_degree",
    "scan_d0",
    "shimura_admissible",
    "shimura_invariants",
    "valid_shimura_discriminants",
    "wn_fixed_count",
    "x0_genus",
    "x0_invariants",
    "x0_plus_genus",
    "xd_genus",
    "xd_plus_genus",
]
