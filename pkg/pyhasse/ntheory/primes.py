"""Primality, prime ranges and squarefree factorization."""
from __future__ import annotations

import sympy

from ..exceptions import InvalidParameterError, NotSquarefreeError

MAX_WORD = 2**63 - 1


def is_prime(n: int) -> bool:
    """
    Return True iff n is prime.

    sympy.isprime is deterministic below 2**64, which covers the supported
    width of every public operation.
    """
    if n < 0:
        raise InvalidParameterError(f"is_prime expects n >= 0, got {n}")
    return bool(sympy.isprime(n))


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Return the primes in [lo, hi] in ascending order."""
    if lo < 2 or hi < lo:
        raise InvalidParameterError(f"primes_in_range needs 2 <= lo <= hi, got {lo}, {hi}")
    return [int(p) for p in sympy.primerange(lo, hi + 1)]


def factor_squarefree(n: int) -> list[int]:
    """
    Return the prime divisors of a squarefree n in ascending order.

    |  n: positive integer; 1 gives the empty list.

    Raises NotSquarefreeError when p**2 divides n for some prime p.
    """
    if n < 1:
        raise InvalidParameterError(f"factor_squarefree expects n >= 1, got {n}")
    factors = sympy.factorint(n)
    squares = sorted(p for p, e in factors.items() if e > 1)
    if squares:
        raise NotSquarefreeError(f"{n} is divisible by {squares[0]}^2")
    return sorted(int(p) for p in factors)


def is_squarefree(n: int) -> bool:
    """Return True iff n >= 1 has no repeated prime factor."""
    try:
        factor_squarefree(n)
    except NotSquarefreeError:
        return False
    return True


def omega(n: int) -> int:
    """Return the number of distinct prime factors of a squarefree n."""
    return len(factor_squarefree(n))
