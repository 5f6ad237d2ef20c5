from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cong13.exactalg import SparsePoly
from cong13.selftest import EX81, J_988B1
from cong13.xpipeline import (ModelError, build_model, expected_determinant, fricke_j, j_invariant, jmap,
                              model_for_curve, model_from_json, model_to_json, parameter_polynomial, pfaffian,
                              run_pipeline, symbolic_determinant_check, two_isogeny_transport, x13_scheme)
from cong13.xpipeline.isogeny import rational_determinant

E1 = [1, 0, 0, 0, 0, 0, 0]


@pytest.fixture(scope="module")
def model_52a2():
    a, b, _ = EX81
    return build_model(1, a, b)


def test_x13_pipeline_dimensions():
    _, dims = run_pipeline(x13_scheme())
    assert dims == (14, 14, 13, 7)


def test_point_of_988b1_on_twist_of_52a2(model_52a2):
    _, _, P = EX81
    assert model_52a2.dims == (14, 14, 13, 7)
    assert model_52a2.on_curve(P)
    assert jmap(model_52a2, P) == J_988B1


def test_tautological_point_gives_j_of_e(model_52a2):
    assert jmap(model_52a2, E1) == j_invariant(-4, -3) == Fr(2 ** 14 * 3 ** 3, 13)


def test_off_curve_point_rejected(model_52a2):
    with pytest.raises(ModelError):
        jmap(model_52a2, [1, 1, 0, 0, 0, 0, 0])


def test_model_json_roundtrip(model_52a2):
    m = model_from_json(model_to_json(model_52a2))
    assert m.curve_quartic == model_52a2.curve_quartic
    assert m.cubics.same_span(model_52a2.cubics)
    assert jmap(m, EX81[2]) == J_988B1


def test_j_zero_curve_uses_quartic_model():
    m = model_for_curve(1, 0, 1)
    assert jmap(m, E1) == 0


def test_fricke_j():
    assert fricke_j(1) == 19 * 48 ** 3
    assert len(parameter_polynomial(-4, -3)) == 15


def test_pfaffian_4x4():
    V = ("a", "b", "c", "d", "e", "f")
    a, b, c, d, e, f = SparsePoly.gens(V)
    z = SparsePoly.zero(V)
    M = [[z, a, b, c], [-a, z, d, e], [-b, -d, z, f], [-c, -e, -f, z]]
    assert pfaffian(M) == a * f - b * e + c * d
    with pytest.raises(ValueError):
        pfaffian([[z, a, b], [-a, z, c], [-b, -c, z]])


def test_transport_requires_root():
    with pytest.raises(ValueError):
        two_isogeny_transport(-4, -3, 2)


def test_transport_determinant_symbolic():
    assert symbolic_determinant_check()


@given(st.integers(-20, 20), st.integers(-20, 20).filter(bool))
@settings(max_examples=30, deadline=None)
def test_transport_determinant_at_rational_points(a, th):
    b = -th ** 3 - a * th
    assert rational_determinant(a, b, th) == expected_determinant(Fr(a), Fr(th))


@pytest.mark.slow
@given(st.integers(-12, 12).filter(bool), st.integers(-12, 12).filter(bool))
@settings(max_examples=3, deadline=None)
def test_jmap_at_tautological_point(a, b):
    if 4 * a ** 3 + 27 * b ** 2 == 0:
        return
    assert jmap(build_model(1, a, b), E1) == j_invariant(a, b)
