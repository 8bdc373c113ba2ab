"""Tests for hypotheses, condition sets, enumeration and certificates."""
import dataclasses
from fractions import Fraction
import json

import pytest
import sympy

from pyhasse.constants import CAVEAT_CITED_LOCAL, CAVEAT_INEFFECTIVE, CAVEAT_INERT_READING
from pyhasse.exceptions import (
    HypothesisFailure,
    InvalidParameterError,
    NotOddPrimeError,
    VariantUnsupportedError,
)
from pyhasse.ntheory import class_number, kronecker, primes_in_range
from pyhasse.twistcert import (
    CurveDescriptor,
    InertSplitting,
    LocalAtLevel,
    LocalPoints,
    PrimeConditionSet,
    PrincipalFormSplitting,
    ShihStatus,
    Variant,
    build_conditions,
    certify,
    check_hypotheses,
    density_lower_bound,
    enumerate_primes,
    expected_prime_count,
    level_obstruction,
    necessary_genus_condition,
    shih_classify,
    to_json,
    twist_parameter,
    verify_certificate,
    weil_threshold,
)


def _split_set(qr_primes, disc, bad_primes=(), threshold=None):
    """Return a split condition set with a hand-picked prime list."""
    if threshold is None:
        threshold = max((*qr_primes, *bad_primes, 1))
    return PrimeConditionSet(
        qr_primes=tuple(qr_primes),
        splitting=PrincipalFormSplitting(disc),
        bad_primes=tuple(bad_primes),
        weil_threshold_M=threshold,
        variant=Variant.SPLIT,
    )


def _inert_set(qr_primes, level, threshold=None):
    """Return an inert condition set with a hand-picked prime list."""
    if threshold is None:
        threshold = max((*qr_primes, 1))
    return PrimeConditionSet(
        qr_primes=tuple(qr_primes),
        splitting=InertSplitting(level),
        bad_primes=(level,),
        weil_threshold_M=threshold,
        variant=Variant.INERT,
    )


def test_hypotheses_x0_137():
    report = check_hypotheses(CurveDescriptor.x0(137))
    assert report.passed
    assert report.h3_local_points is LocalPoints.PROVEN_CUSPS
    assert report.quotient_genus >= 2
    assert report.genus == 11
    assert report.genus_consistent
    assert "137" in report.h1_justification


def test_hypotheses_failures():
    assert "h1" in check_hypotheses(CurveDescriptor.x0(163)).failures()
    assert check_hypotheses(CurveDescriptor.x0(131)).failures() == ("h4",)
    report = check_hypotheses(CurveDescriptor.xd_plus(6, 3))
    assert "h1" in report.failures()
    assert report.h3_local_points is LocalPoints.CITED_FACT


def test_necessary_genus_condition():
    assert necessary_genus_condition(2, 1)
    assert not necessary_genus_condition(1, 1)
    assert not necessary_genus_condition(5, 0)


def test_descriptor_validation():
    with pytest.raises(InvalidParameterError):
        CurveDescriptor.x0(1)
    with pytest.raises(InvalidParameterError):
        CurveDescriptor.xd_plus(6)
    desc = CurveDescriptor.xd_plus(6, 2)
    assert desc.bad_primes == (2, 3)
    assert desc.cm_discriminant == -8
    assert desc.to_dict() == {"kind": "XDPlus", "D": 6, "q": 2}


@pytest.mark.parametrize(("genus", "expected"), [(1, 1), (2, 13), (3, 33), (11, 481), (14, 781)])
def test_weil_threshold(genus, expected):
    assert weil_threshold(genus) == expected


def test_weil_threshold_is_sharp():
    for genus in range(1, 8):
        threshold = weil_threshold(genus)
        assert (threshold + 1) ** 2 <= 4 * genus * genus * threshold
        for ell in range(threshold + 1, threshold + 500):
            assert (ell + 1) ** 2 > 4 * genus * genus * ell
    with pytest.raises(InvalidParameterError):
        weil_threshold(0)


def test_build_conditions_split_137():
    conds = build_conditions(CurveDescriptor.x0(137), Variant.SPLIT)
    assert conds.splitting == PrincipalFormSplitting(-548)
    assert conds.weil_threshold_M == 481
    assert conds.qr_primes == tuple(primes_in_range(3, 481))
    assert conds.bad_primes == (137,)


def test_build_conditions_inert_167():
    conds = build_conditions(CurveDescriptor.x0(167), "inert")
    assert conds.splitting == InertSplitting(167)
    assert conds.weil_threshold_M == 781
    assert 167 not in conds.qr_primes
    assert conds.qr_primes == tuple(ell for ell in primes_in_range(3, 781) if ell != 167)


def test_build_conditions_rejections():
    with pytest.raises(HypothesisFailure) as err:
        build_conditions(CurveDescriptor.x0(131), Variant.INERT)
    assert err.value.items == ("h4",)
    with pytest.raises(HypothesisFailure):
        build_conditions(CurveDescriptor.x0(131), Variant.SPLIT)
    with pytest.raises(VariantUnsupportedError):
        build_conditions(CurveDescriptor.x0(137), Variant.INERT)


def test_condition_set_validation():
    with pytest.raises(InvalidParameterError):
        _split_set((2,), -4)
    with pytest.raises(InvalidParameterError):
        _split_set((3, 11), -4, threshold=7)
    with pytest.raises(InvalidParameterError):
        _inert_set((3, 167), 167, threshold=200)


def test_density_examples():
    assert density_lower_bound(_inert_set((), 167), 11) == Fraction(1, 8)
    conds = _split_set((3, 5, 7), -8)
    assert conds.unramified_count == 3
    assert density_lower_bound(conds, 2) == Fraction(1, 128)
    assert _split_set((3, 5, 7), -20).unramified_count == 2


def test_density_monotone():
    sets = [_split_set(primes_in_range(3, bound), -4) for bound in (3, 5, 7, 11, 13)]
    bounds = [density_lower_bound(conds, h) for conds in sets for h in (1, 2, 3)]
    for conds in sets:
        values = [density_lower_bound(conds, h) for h in range(1, 6)]
        assert values == sorted(values, reverse=True)
    by_k = [density_lower_bound(conds, 1) for conds in sets]
    assert by_k == sorted(by_k, reverse=True)
    assert all(value > 0 for value in bounds)


def test_enumerate_sums_of_two_squares():
    conds = _split_set((), -4)
    assert [trace.prime for trace in enumerate_primes(conds, 120)] == [17, 41, 73, 89, 97, 113]
    assert enumerate_primes(conds, 3) == []
    with pytest.raises(InvalidParameterError):
        enumerate_primes(conds, 2)


def test_enumerate_matches_per_prime_loop(condition_oracle):
    for conds in (
        _split_set((3, 7), -20, bad_primes=(2, 5)),
        _split_set((3, 5, 7, 11), -4),
        _inert_set((3, 5, 7), 167),
    ):
        found = [trace.prime for trace in enumerate_primes(conds, 10**5)]
        expected = [p for p in primes_in_range(2, 10**5) if condition_oracle(conds, p)]
        assert found == expected
        assert found


def test_enumerate_is_independent_of_workers():
    conds = _split_set((3, 7), -20, bad_primes=(2, 5))
    sequential = enumerate_primes(conds, 10**5)
    assert enumerate_primes(conds, 10**5, workers=3) == sequential


def test_inert_chebotarev_at_desk_scale(euler_criterion):
    conds = _inert_set((3, 5), 167)
    traces = enumerate_primes(conds, 10**6)
    density = density_lower_bound(conds, class_number(-167))
    assert density == Fraction(1, 32)
    observed = Fraction(len(traces), int(sympy.primepi(10**6)))
    assert density / 2 <= observed <= 2 * density
    for trace in traces:
        p = trace.prime
        assert p % 8 == 1
        assert all(euler_criterion(p, ell) for ell in conds.qr_primes)
        assert not euler_criterion(167, p)


def test_split_primes_are_residues_mod_level(euler_criterion):
    conds = _split_set((), -420, bad_primes=(3, 5, 7))
    traces = enumerate_primes(conds, 10**5)
    assert traces
    for trace in traces:
        assert all(euler_criterion(trace.prime, ell) for ell in (3, 5, 7))


def test_split_and_inert_are_exclusive():
    split = {trace.prime for trace in enumerate_primes(_split_set((3, 5), -167), 10**5)}
    inert = {trace.prime for trace in enumerate_primes(_inert_set((3, 5), 167), 10**5)}
    assert inert
    assert not split & inert


def test_condition_trace():
    conds = _split_set((3,), -4)
    trace = conds.check(73)
    assert trace.passed
    assert trace.witness is not None
    assert trace.witness[0] ** 2 + trace.witness[1] ** 2 == 73
    data = trace.to_dict()
    assert data["qr_3"] is True
    assert data["p_mod_8"] is True
    assert not conds.check(3).passed
    assert not conds.check(41).passed


def test_expected_prime_count():
    conds = _inert_set((3, 5), 167)
    assert expected_prime_count(conds, 100, 11) == Fraction(25, 32)


def test_certify_split_137():
    cert = certify(CurveDescriptor.x0(137), Variant.SPLIT, 10**5)
    assert cert.hypotheses.passed
    assert cert.density_lower_bound > 0
    assert cert.primes_found == ()
    assert CAVEAT_INEFFECTIVE in cert.caveats
    assert any("below one" in caveat for caveat in cert.caveats)
    assert verify_certificate(cert)


def test_certify_inert_167_json():
    cert = certify(CurveDescriptor.x0(167), Variant.INERT, 10**4)
    assert CAVEAT_INERT_READING in cert.caveats
    document = to_json(cert)
    assert document == to_json(certify(CurveDescriptor.x0(167), Variant.INERT, 10**4, workers=2))
    data = json.loads(document)
    assert set(data) == {"caveats", "conditions", "density", "descriptor", "hypotheses", "primes", "version"}
    assert data["descriptor"] == {"kind": "X0N", "N": 167}
    assert data["density"]["num"] == 1
    assert data["density"]["den"] == str(8 * 2 ** len(cert.conditions.qr_primes))
    assert data["conditions"]["splitting"] == {"kind": "Inert", "N": 167}
    assert data["version"] == "1"


def test_certify_failures():
    with pytest.raises(HypothesisFailure) as err:
        certify(CurveDescriptor.x0(163), Variant.SPLIT, 1000)
    assert "h1" in err.value.items
    with pytest.raises(HypothesisFailure) as err:
        certify(CurveDescriptor.xd_plus(6, 3), Variant.SPLIT, 1000)
    assert "h1" in err.value.items


def test_verify_certificate_detects_tampering():
    cert = certify(CurveDescriptor.x0(137), Variant.SPLIT, 10**4)
    forged = dataclasses.replace(cert, primes_found=(cert.conditions.check(577),))
    assert not verify_certificate(forged)


def test_cited_local_caveat():
    from pyhasse.twistcert.certificate import _caveats

    desc = CurveDescriptor.xd_plus(6, 2)
    caveats = _caveats(desc, _split_set((), -8), Fraction(5))
    assert caveats == (CAVEAT_INEFFECTIVE, CAVEAT_CITED_LOCAL)


@pytest.mark.parametrize(("p", "expected"), [(5, 5), (7, -7), (13, 13), (3, -3)])
def test_twist_parameter(p, expected):
    assert twist_parameter(p) == expected


@pytest.mark.parametrize("p", [2, 9, 1])
def test_twist_parameter_rejects(p):
    with pytest.raises(NotOddPrimeError):
        twist_parameter(p)


def test_level_obstruction_table():
    for level in primes_in_range(3, 50):
        obstructed = level_obstruction(level) is LocalAtLevel.OBSTRUCTED_AT_N
        assert obstructed is (level % 4 == 1)
    assert level_obstruction(17) is LocalAtLevel.OBSTRUCTED_AT_N
    assert level_obstruction(19) is LocalAtLevel.LOCAL_POINTS_AT_N
    with pytest.raises(NotOddPrimeError):
        level_obstruction(2)


def test_shih_classify():
    report = shih_classify(17, 3)
    assert kronecker(17, 3) == -1
    assert report.genus_class == 1
    assert report.local_obstruction is LocalAtLevel.OBSTRUCTED_AT_N
    assert report.status is ShihStatus.OBSTRUCTED
    assert report.obstruction_place == 17

    report = shih_classify(2, 3)
    assert report.genus_class == 0
    assert report.status is ShihStatus.SUCCEEDS

    report = shih_classify(10, 11)
    assert kronecker(5, 11) == 1
    assert report.obstruction_place is None
    assert report.status is ShihStatus.OPEN

    assert shih_classify(10, 13).obstruction_place == 5
    assert report.local_obstruction is LocalAtLevel.LOCAL_POINTS_AT_FIVE
    assert shih_classify(11, 13).status is ShihStatus.CONDITIONAL_ON_BSD
    assert shih_classify(11, 3).status is ShihStatus.OPEN
    assert shih_classify(7, 3).status is ShihStatus.NOT_APPLICABLE
    assert shih_classify(6, 5).genus_class == 0
    assert shih_classify(37, 5).genus_class == 2
    assert shih_classify(7, 3).twist_parameter == -3


def test_shih_classify_records_outcome_at_five():
    for p in primes_in_range(3, 200):
        if p == 5:
            continue
        report = shih_classify(10, p)
        if kronecker(5, p) == 1:
            assert report.local_obstruction is LocalAtLevel.LOCAL_POINTS_AT_FIVE
            assert report.obstruction_place is None
        else:
            assert report.local_obstruction is LocalAtLevel.OBSTRUCTED_AT_FIVE
            assert report.obstruction_place == 5
            if report.shih_applicable:
                assert report.status is ShihStatus.OBSTRUCTED
    assert shih_classify(6, 5).local_obstruction is None
