"""Independent oracles shared by the test modules."""
from math import gcd, isqrt

import pytest

from pyhasse.twistcert import InertSplitting


def _sieve(limit):
    """Return a primality table for 0..limit."""
    table = [True] * (limit + 1)
    table[0] = table[1] = False
    for n in range(2, isqrt(limit) + 1):
        if table[n]:
            table[n * n :: n] = [False] * len(range(n * n, limit + 1, n))
    return table


def _naive_class_number(disc):
    """Count reduced primitive forms by looping over every (a, b)."""
    count = 0
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a + 1, a + 1):
            if (b * b - disc) % (4 * a):
                continue
            c = (b * b - disc) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, b), c) == 1:
                count += 1
        a += 1
    return count


def _euler(a, p):
    """Return True iff a is a nonzero square modulo the odd prime p."""
    return pow(a % p, (p - 1) // 2, p) == 1


def _principal_value_search(p, disc):
    """Return True iff the principal form of disc represents p."""
    size = -disc
    for y in range(isqrt(4 * p // size) + 1):
        rest = 4 * p - size * y * y
        x = isqrt(rest)
        if x * x == rest and (x - disc * y) % 2 == 0:
            return True
    return False


def _condition_oracle(conds, p):
    """Test every condition of conds at p without the library's symbols."""
    if p % 8 != 1 or p <= conds.weil_threshold_M:
        return False
    if p in conds.qr_primes or p in conds.bad_primes:
        return False
    if not all(_euler(p, ell) for ell in conds.qr_primes):
        return False
    if isinstance(conds.splitting, InertSplitting):
        level = conds.splitting.level
        return level % p != 0 and not _euler(level, p)
    disc = conds.splitting.disc
    return (2 * disc) % p != 0 and _principal_value_search(p, disc)


@pytest.fixture(scope="session")
def prime_table():
    """Primality table up to 10**6."""
    return _sieve(10**6)


@pytest.fixture
def naive_class_number():
    """Return the plain-loop reduced form counter."""
    return _naive_class_number


@pytest.fixture
def condition_oracle():
    """Return the per-prime condition loop."""
    return _condition_oracle


@pytest.fixture
def euler_criterion():
    """Return Euler's criterion for odd prime moduli."""
    return _euler
