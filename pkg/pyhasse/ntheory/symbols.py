"""Kronecker symbols and square roots modulo a prime."""
from __future__ import annotations

from sympy.functions.combinatorial.numbers import kronecker_symbol
from sympy.ntheory import is_quad_residue
from sympy.ntheory import sqrt_mod as _sympy_sqrt_mod

from ..exceptions import InvalidModulusError, InvalidParameterError
from .primes import is_prime


def kronecker(a: int, n: int) -> int:
    """
    Return the Kronecker symbol (a|n).

    Extends the Jacobi symbol to even and negative n. (0|0) is rejected.
    """
    if a == 0 and n == 0:
        raise InvalidParameterError("kronecker(0, 0) is undefined")
    return int(kronecker_symbol(a, n))


def sqrt_mod(a: int, p: int) -> int | None:
    """
    Return r in [0, p - 1] with r**2 = a (mod p), or None when (a|p) = -1.

    |  a: any integer.
    |  p: odd prime modulus.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise InvalidModulusError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    if not is_quad_residue(a, p):
        return None
    return int(_sympy_sqrt_mod(a, p))
