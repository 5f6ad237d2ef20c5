import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cong13.congruence import (CONSISTENT, REFUTED, ramification_obstruction, trace_congruence_scan,
                               triviality_screen)
from cong13.curvedata import get_curve
from cong13.elliptic import EllipticCurveQ, quadratic_twist

E11a1 = EllipticCurveQ(0, -1, 1, -10, -20)
E11a3 = EllipticCurveQ(0, -1, 1, 0, 0)
E37 = EllipticCurveQ(0, 0, 1, -1, 0)


def test_known_congruence_is_consistent():
    rep = trace_congruence_scan(get_curve("52a2").curve, get_curve("988b1").curve, 13, 2000)
    assert rep.verdict == CONSISTENT
    assert rep.distinct_j
    assert rep.primes_checked > 250
    assert 2 in rep.skipped and 13 in rep.skipped and 19 in rep.skipped


def test_unrelated_curves_are_refuted():
    rep = trace_congruence_scan(E11a1, E37, 13, 1000)
    assert rep.verdict == REFUTED
    assert rep.refuting_prime == 3
    assert rep.residues == (12, 10)


def test_isogenous_curves_flagged_by_screen():
    rep = trace_congruence_scan(E11a1, E11a3, 13, 500)
    assert rep.verdict == CONSISTENT
    screen = triviality_screen(E11a1, E11a1)
    assert not screen["distinct_j"]


def test_report_json_mentions_evidence():
    rep = trace_congruence_scan(E11a1, E11a3, 13, 100).to_json()
    assert rep["verdict"] == CONSISTENT
    assert "evidence" in rep["note"]


@pytest.mark.parametrize("n, B", [(1, 100), (13, 5)])
def test_bad_parameters(n, B):
    with pytest.raises(ValueError):
        trace_congruence_scan(E11a1, E37, n, B)


def test_multiplicative_obstruction():
    rep = ramification_obstruction(get_curve("sigma-E1").curve, get_curve("sigma-E2").curve, 13)
    assert rep.obstructing == [17681]


def test_no_obstruction_for_congruent_pair():
    rep = ramification_obstruction(get_curve("52a2").curve, get_curve("988b1").curve, 13)
    assert rep.obstructing == []


# ---------------------------------------------------------------- properties

curves = st.tuples(st.integers(-15, 15), st.integers(-15, 15)).filter(lambda ab: 4 * ab[0] ** 3 + 27 * ab[1] ** 2)


@given(curves, curves, st.sampled_from([2, 3, 5, 13]))
@settings(max_examples=20, deadline=None)
def test_scan_is_symmetric(a, b, n):
    E, F = EllipticCurveQ.short(*a), EllipticCurveQ.short(*b)
    r1, r2 = trace_congruence_scan(E, F, n, 200), trace_congruence_scan(F, E, n, 200)
    assert (r1.verdict, r1.refuting_prime, r1.primes_checked) == (r2.verdict, r2.refuting_prime, r2.primes_checked)


@given(st.sampled_from([-1, 2, -3, 5, -7]))
@settings(max_examples=5, deadline=None)
def test_scan_survives_common_twist(d):
    E, F = get_curve("52a2").curve, get_curve("988b1").curve
    rep = trace_congruence_scan(quadratic_twist(E, d), quadratic_twist(F, d), 13, 600)
    assert rep.verdict == CONSISTENT


@given(curves, st.sampled_from([-1, 3, -11]))
@settings(max_examples=10, deadline=None)
def test_curve_is_congruent_to_itself_and_twist_mod_2(ab, d):
    E = EllipticCurveQ.short(*ab)
    assert trace_congruence_scan(E, E, 13, 150).verdict == CONSISTENT
    assert trace_congruence_scan(E, quadratic_twist(E, d), 2, 150).verdict == CONSISTENT
