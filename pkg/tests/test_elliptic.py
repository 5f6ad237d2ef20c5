from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import primerange

from cong13.elliptic import (ADDITIVE, GOOD, MULTIPLICATIVE, EllipticCurveQ, SingularCurve, ap_trace, conductor,
                             curve_invariants, hasse_ok, minimal_conductor_twist, minimal_model, quadratic_twist,
                             same_j, tate_conductor, tate_local, trace_sweep, valuation)
from cong13.exactalg import legendre

E11 = EllipticCurveQ(0, -1, 1, -10, -20)
E37 = EllipticCurveQ(0, 0, 1, -1, 0)


def test_invariants_of_11a1():
    assert E11.discriminant == -161051
    assert E11.j_invariant == F(-122023936, 161051)
    inv = curve_invariants(0, -1, 1, -10, -20)
    assert inv["c4"] == 496 and inv["c6"] == 20008


def test_singular_curve_rejected():
    with pytest.raises(SingularCurve):
        EllipticCurveQ.short(0, 0)


@pytest.mark.parametrize("E, N", [(E11, 11), (E37, 37), (EllipticCurveQ.short(-1, 0), 32),
                                  (EllipticCurveQ.short(-4, -3), 52), (EllipticCurveQ(1, 0, 0, -1, 0), 65)])
def test_conductor_oracles(E, N):
    assert conductor(E) == N


def test_local_data_of_11a1():
    local, _ = tate_local(E11, 11)
    assert (local.kodaira, local.reduction, local.split) == ("I5", MULTIPLICATIVE, True)
    assert local.conductor_exponent == 1


def test_additive_reduction():
    local, _ = tate_local(EllipticCurveQ.short(-1, 0), 2)
    assert local.reduction == ADDITIVE
    assert local.conductor_exponent == 5


def test_traces_of_11a1():
    assert [ap_trace(E11, p).ap for p in (2, 3, 5, 7, 13, 17, 19)] == [-2, -1, 1, -2, 4, -2, 0]
    recs = list(trace_sweep(E11, 20))
    assert [r.p for r in recs] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert recs[4].type == MULTIPLICATIVE and recs[4].ap == 1
    assert all(hasse_ok(r) for r in recs)


def test_traces_of_37a1():
    assert [ap_trace(E37, p).ap for p in (2, 3, 5, 7)] == [-2, -3, -2, -1]


def test_minimal_model_undoes_scaling():
    scaled = E11.rst(1, 2, 3, 5)
    assert not scaled.is_integral()
    assert minimal_model(scaled).ainvs == E11.ainvs


def test_minimal_conductor_twist_recovers_11a1():
    d, Em = minimal_conductor_twist(quadratic_twist(E11, -7))
    assert conductor(Em) == 11
    assert same_j(Em, E11)


def test_valuation():
    assert valuation(-161051, 11) == 5
    assert valuation(7, 2) == 0


# ---------------------------------------------------------------- properties

curves = st.tuples(st.integers(-30, 30), st.integers(-30, 30)).filter(lambda ab: 4 * ab[0] ** 3 + 27 * ab[1] ** 2)
discs = st.sampled_from([-1, 2, -2, 3, -3, 5, -7, 13, -11])


@given(curves, discs)
@settings(max_examples=25, deadline=None)
def test_twist_relation(ab, d):
    E = EllipticCurveQ.short(*ab)
    Ed = quadratic_twist(E, d)
    bad = set(tate_conductor(E).local) | set(tate_conductor(Ed).local)
    for p in primerange(3, 60):
        if p in bad or d % p == 0:
            continue
        assert ap_trace(Ed, p).ap == legendre(d, p) * ap_trace(E, p).ap


@given(curves, st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3), st.sampled_from([1, 2, 3, F(1, 2)]))
@settings(max_examples=25, deadline=None)
def test_minimal_model_is_stable(ab, r, s, t, u):
    E = EllipticCurveQ.short(*ab)
    M = minimal_model(E)
    assert minimal_model(M).ainvs == M.ainvs
    assert minimal_model(E.rst(r, s, t, u)).ainvs == M.ainvs
    assert M.j_invariant == E.j_invariant
    assert M.a1 in (0, 1) and M.a3 in (0, 1) and M.a2 in (-1, 0, 1)


@given(curves)
@settings(max_examples=25, deadline=None)
def test_good_reduction_traces_satisfy_hasse(ab):
    E = EllipticCurveQ.short(*ab)
    for rec in trace_sweep(E, 100):
        assert hasse_ok(rec)
        if rec.type == GOOD:
            assert rec.ap * rec.ap <= 4 * rec.p
