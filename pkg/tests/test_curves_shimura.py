"""Tests for Shimura curve invariants."""
from fractions import Fraction
from math import prod

import pytest

from pyhasse.curves import (
    ShimuraDescriptor,
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
from pyhasse.exceptions import (
    InvalidDiscriminantError,
    InvalidParameterError,
    InvalidProbabilityError,
    NotExactDivisorError,
)
from pyhasse.ntheory import kronecker


@pytest.mark.parametrize(("disc", "expected"), [(6, 0), (26, 2), (10, 0), (14, 1), (15, 1)])
def test_xd_genus_examples(disc, expected):
    assert xd_genus(ShimuraDescriptor(disc)) == expected


@pytest.mark.parametrize(("m", "expected"), [(6, 2), (3, 2), (2, 2)])
def test_al_fixed_count_d6(m, expected):
    assert al_fixed_count(ShimuraDescriptor(6), m) == expected


@pytest.mark.parametrize("m", [1, 5, 4])
def test_al_fixed_count_rejects(m):
    with pytest.raises(NotExactDivisorError):
        al_fixed_count(ShimuraDescriptor(6), m)


def test_quotient_genera_small():
    assert xd_plus_genus(ShimuraDescriptor(6)) == 0
    assert klein_quotient_genus(ShimuraDescriptor(6, 2)) == 0
    assert xd_plus_genus(ShimuraDescriptor(26)) == 0
    assert al_fixed_count(ShimuraDescriptor(26), 26) == 6
    assert full_quotient_genus(ShimuraDescriptor(6)) == 0


def test_klein_needs_q():
    with pytest.raises(InvalidParameterError):
        klein_quotient_genus(ShimuraDescriptor(6))


@pytest.mark.parametrize(("disc", "q"), [(30, None), (12, None), (7, None), (6, 5), (1, None)])
def test_descriptor_rejects(disc, q):
    with pytest.raises(InvalidDiscriminantError):
        ShimuraDescriptor(disc, q)


def test_from_primes():
    desc = ShimuraDescriptor.from_primes(167, [5, 13, 17])
    assert desc.D == 167 * 5 * 13 * 17
    assert desc.q == 167
    assert desc.factors == (5, 13, 17, 167)
    with pytest.raises(InvalidDiscriminantError):
        ShimuraDescriptor.from_primes(167, [5, 5, 13])


def test_admissible_with_inert_primes():
    report = shimura_admissible(167, [5, 13, 17])
    assert all(kronecker(-167, p) == -1 for p in (5, 13, 17))
    assert report.fixed_points_exist
    assert report.legendre_ok
    assert report.legendre_minus_ok
    assert report.q_large
    assert report.no_rational_fixed
    assert report.quotient_finite
    assert report.admissible
    assert not report.literal_condition_diverges


def test_admissible_threshold_and_symbol():
    assert not shimura_admissible(163, [5, 13, 17]).q_large
    assert not shimura_admissible(163, [5, 13, 17]).admissible
    report = shimura_admissible(167, [2])
    assert kronecker(167, 2) == 1
    assert not report.legendre_ok
    with pytest.raises(InvalidDiscriminantError):
        shimura_admissible(167, [5, 13])


def test_scan_d0():
    assert scan_d0(6) == 6
    with pytest.raises(InvalidParameterError):
        scan_d0(5)
    small = scan_d0(500)
    assert small <= scan_d0(1000) <= 1000


def test_cm_density_heuristic():
    value = cm_density_heuristic(9, 1, 4)
    assert value == 1 - Fraction(3, 4) ** 9
    assert Fraction(9248, 10000) <= value <= Fraction(9250, 10000)
    assert cm_density_heuristic(0, 1, 4) == 0
    assert cm_density_heuristic(1, 1, 1) == 1


@pytest.mark.parametrize(("num", "den"), [(5, 4), (-1, 4), (1, 0)])
def test_cm_density_heuristic_rejects(num, den):
    with pytest.raises(InvalidProbabilityError):
        cm_density_heuristic(3, num, den)


def test_valid_shimura_discriminants():
    assert valid_shimura_discriminants(1, 40) == [6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39]


def test_structural_identities_up_to_10000():
    for disc in valid_shimura_discriminants(6, 10**4):
        desc = ShimuraDescriptor(disc)
        inv = shimura_invariants(desc)
        assert 12 * (inv.genus_xd - 1) + 3 * inv.e2 + 4 * inv.e3 == prod(p - 1 for p in desc.factors)
        assert all(count % 2 == 0 for count in inv.al_fixed.values())
        assert 2 * inv.genus_xd - 2 == 2 * (2 * inv.genus_xd_plus - 2) + inv.al_fixed[disc]
        assert inv.genus_full_quotient >= 0
        for q in desc.factors:
            klein = klein_quotient_genus(desc.with_q(q))
            fixed = inv.al_fixed[q] + inv.al_fixed[disc // q] + inv.al_fixed[disc]
            assert 2 * inv.genus_xd - 2 == 4 * (2 * klein - 2) + fixed


def test_full_quotient_genus_grows():
    minima = []
    for start in (10**2, 10**3, 10**4):
        minima.append(min(full_quotient_genus(disc) for disc in valid_shimura_discriminants(start, 2 * start)))
    assert minima == sorted(minima)


def test_no_fixed_points_without_embeddings():
    for disc in valid_shimura_discriminants(6, 2000):
        desc = ShimuraDescriptor(disc)
        for m in desc.exact_divisors():
            if m == 2:
                continue
            blocked = any(
                kronecker(-4 * m, p) == 1 and (m % 4 != 3 or kronecker(-m, p) == 1)
                for p in desc.factors
                if (disc // m) % p == 0
            )
            if blocked:
                assert al_fixed_count(desc, m) == 0
