from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import prime

from cong13.elliptic import EllipticCurveQ, quadratic_twist
from cong13.sigma13 import (EXAMPLE_POINT, FIBER_POINT, FIBER_T, Pole, alpha, alpha_mod_p, appendix_examples, beta,
                            c6_generator, c6_preserves_model, diagram_commutes, f_factorisation_identity, f_poly,
                            f_value, fiber_non_torsion, fiber_points, fiber_quartic, fiber_squarefree, h_poly,
                            isomorphic_over_q, lam_mu, multiples, pi_invariance_identity, pi_map, pi_sum_identity,
                            sigma_membership)


def test_h_has_degree_6():
    assert h_poly().degree() == 6


def test_f_polynomial_matches_evaluator():
    assert f_poly().evaluate([Fr(2), Fr(3), Fr(5)]) == f_value(2, 3, 5)


def test_example_point_on_sigma():
    assert sigma_membership(*EXAMPLE_POINT).member
    T, X, Y = EXAMPLE_POINT
    assert not sigma_membership(T, X, Y + 1).member


def test_poles():
    with pytest.raises(Pole):
        pi_map(0)
    with pytest.raises(Pole):
        alpha((2, 1), (2, 3))
    with pytest.raises(Pole):
        c6_generator(1, 0)


def test_exact_identities():
    assert pi_invariance_identity()
    assert pi_sum_identity()
    assert c6_preserves_model()
    assert f_factorisation_identity()
    assert diagram_commutes()["passed"]


def test_beta_second_coordinate():
    assert beta(2, 3)[1] == 3


def test_fibre_over_minus_two():
    assert lam_mu(FIBER_T) == (-1, 6)
    # (X^2 - 2X + 5)(193X^2 - 422X + 2669)
    a, b = [5, -2, 1], [2669, -422, 193]
    expected = [sum(a[i] * b[k - i] for i in range(3) if 0 <= k - i < 3) for k in range(5)]
    assert fiber_quartic(FIBER_T) == expected
    assert fiber_squarefree()["squarefree"]
    pts = fiber_points(FIBER_T, 250)
    assert FIBER_POINT in pts
    assert all(sigma_membership(FIBER_T, x, y).member for x, y in pts)


def test_fibre_point_has_infinite_order():
    cert = fiber_non_torsion()
    assert cert.isomorphic_to_jacobian
    assert cert.nonzero_multiples == 12
    assert cert.passed


def test_torsion_point_detected():
    E = EllipticCurveQ.short(0, 1)
    assert multiples(E, (2, 3), 6)[-1] is None


def test_isomorphism_test():
    E = EllipticCurveQ.short(-4, -3)
    assert isomorphic_over_q(E, E.rst(1, 2, 3, 5))
    assert not isomorphic_over_q(E, quadratic_twist(E, -1))


def test_worked_example():
    out = appendix_examples(2000)
    assert out["passed"], out["checks"]
    assert out["obstruction"]["obstructing"] == [17681]


@given(st.integers(30, 400).map(prime).filter(lambda p: p != 13))
@settings(max_examples=15, deadline=None)
def test_alpha_lands_on_sigma_mod_p(p):
    assert alpha_mod_p(p, n=10)["passed"]


@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20), st.fractions(max_denominator=20))
@settings(max_examples=100, deadline=None)
def test_membership_is_exactly_the_equation(T, X, Y):
    lam, mu = lam_mu(T)
    assert sigma_membership(T, X, Y).member == (Y * Y == f_value(lam, mu, X))


@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20))
@settings(max_examples=100, deadline=None)
def test_negative_values_are_never_members(T, X):
    lam, mu = lam_mu(T)
    v = f_value(lam, mu, X)
    # both quadratic factors are positive definite in X, so f never takes a negative value
    assert v >= 0
    assert not sigma_membership(T, X, 0).member or v == 0
