"""Exact elementary number theory for imaginary quadratic orders."""
from .forms import (
    Discriminant,
    PrincipalForm,
    ReducedForm,
    class_number,
    class_number_budget,
    field_class_number,
    fundamental_discriminant,
    reduced_forms,
    represented_by_principal_form,
    represented_by_principal_form_exhaustive,
)
from .primes import factor_squarefree, is_prime, is_squarefree, omega, primes_in_range
from .symbols import kronecker, sqrt_mod

__all__ = [
    "Discriminant",
    "PrincipalForm",
    "ReducedForm",
    "class_number",
    "class_number_budget",
    "factor_squarefree",
    "field_class_number",
    "fundamental_discriminant",
    "is_prime",
    "is_squarefree",
    "kronecker",
    "omega",
    "primes_in_range",
    "reduced_forms",
    "represented_by_principal_form",
    "represented_by_principal_form_exhaustive",
    "sqrt_mod",
]
