from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cong13.exactalg import (GF, NotASquare, QuotientRing, SparsePoly, UnivariateQuotient, ZeroDivisorError,
                             cyclotomic_ring, determinant, exact_poly_sqrt, gauss_sum, in_span, legendre,
                             nullspace_basis, quotient_reduce, rank, ring_inverse, span_equal, upoly)
from cong13.exactalg.serialize import dumps_poly, loads_poly, parse_rational, rational_str

X = ("x",)
small = st.integers(-20, 20)
coeff_lists = st.lists(small, min_size=1, max_size=5)


def upoly_sp(coeffs):
    return SparsePoly.from_dict(X, {(i,): c for i, c in enumerate(coeffs) if c})


# ---------------------------------------------------------------- oracles


def test_sqrt_of_perfect_square():
    f = SparsePoly.parse("x^2 + 2*x + 1", X)
    assert exact_poly_sqrt(f) == SparsePoly.parse("x + 1", X)


def test_sqrt_rejects_non_square():
    with pytest.raises(NotASquare):
        exact_poly_sqrt(SparsePoly.parse("x^2 - 1", X))


def test_nullspace_of_identity_is_trivial():
    assert nullspace_basis([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []


def test_nullspace_of_zero_matrix_is_everything():
    basis = nullspace_basis([[0, 0, 0], [0, 0, 0]])
    assert len(basis) == 3
    assert rank(basis) == 3


def test_reduction_modulo_x2_plus_1():
    R = QuotientRing([1, 0, 1])
    x = R.gen()
    assert x * x == R.from_coeffs([-1])
    assert quotient_reduce(SparsePoly.parse("x^2", X), R) == R.from_coeffs([-1])


def test_inverse_in_gaussian_rationals():
    R = QuotientRing([1, 0, 1])
    x = R.gen()
    inv, (u, v) = ring_inverse(x)
    assert inv == -x
    assert upoly.add(upoly.mul(u, [0, 1]), upoly.mul(v, R.modulus)) == [1]


def test_zero_divisor_is_reported():
    R = QuotientRing([-1, 0, 1])  # x^2 - 1
    with pytest.raises(ZeroDivisorError):
        (R.gen() - 1).inverse()


def test_cyclotomic_field():
    R = cyclotomic_ring()
    z = R.gen()
    assert z ** 13 == R.one()
    assert z != R.one()
    assert z.inverse() == z ** 12
    assert gauss_sum(R) ** 2 == R.from_coeffs([13])


def test_gauss_sum_mod_p():
    R = cyclotomic_ring(13, p=53)  # 53 = 1 mod 13 so Phi_13 splits
    assert gauss_sum(R) ** 2 == R.from_coeffs([13])


def test_legendre_values():
    assert [legendre(a, 13) for a in range(1, 13)] == [1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1]


def test_gf_arithmetic():
    a = GF(3, 7)
    assert a * a.inverse() == GF(1, 7)
    r = GF(2, 7).sqrt()
    assert r * r == GF(2, 7)


def test_rational_roots():
    assert upoly.rational_roots([F(-6), F(11), F(-6), F(1)]) == [1, 2, 3]
    assert upoly.rational_roots([F(-1), F(0), F(2)]) == []


def test_determinant_and_span():
    assert determinant([[2, 1], [7, 4]]) == 1
    assert in_span([[1, 0, 1], [0, 1, 1]], [2, 3, 5])
    assert not in_span([[1, 0, 1], [0, 1, 1]], [0, 0, 1])
    assert span_equal([[1, 1], [1, -1]], [[1, 0], [0, 1]])


def test_univariate_quotient_of_sparse_poly():
    A = UnivariateQuotient([-2, 0, 1])  # t^2 - 2
    t = SparsePoly.var(("t",), "t")
    assert A.reduce_poly(t ** 4 + t) == SparsePoly.parse("t + 4", ("t",))


def test_rational_serialisation():
    assert rational_str(F(-3, 4)) == "-3/4"
    assert parse_rational("-3/4") == F(-3, 4)
    p = SparsePoly.parse("x^2*y - 3/2*y + 7", ("x", "y"))
    assert loads_poly(dumps_poly(p)) == p


# ---------------------------------------------------------------- properties


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_rank_nullity(rows):
    kernel = nullspace_basis(rows)
    assert rank(rows) + len(kernel) == 4
    for v in kernel:
        for r in rows:
            assert sum(F(a) * b for a, b in zip(r, v)) == 0


@given(coeff_lists.filter(lambda c: c[-1] != 0))
@settings(max_examples=60, deadline=None)
def test_sqrt_of_square(coeffs):
    g = upoly_sp(coeffs)
    root = exact_poly_sqrt(g * g)
    assert root == g or root == -g


@given(coeff_lists, coeff_lists, small)
@settings(max_examples=60, deadline=None)
def test_evaluation_is_a_ring_homomorphism(a, b, x0):
    f, g = upoly_sp(a), upoly_sp(b)
    assert (f * g).evaluate([x0]) == f.evaluate([x0]) * g.evaluate([x0])
    assert (f + g).evaluate([x0]) == f.evaluate([x0]) + g.evaluate([x0])


@given(coeff_lists, coeff_lists)
@settings(max_examples=60, deadline=None)
def test_quotient_reduce_respects_ring_operations(a, b):
    R = QuotientRing([1, 0, 0, 1, 1])  # x^4 + x^3 + 1
    f, g = upoly_sp(a), upoly_sp(b)
    rf, rg = quotient_reduce(f, R), quotient_reduce(g, R)
    assert quotient_reduce(f * g, R) == rf * rg
    assert quotient_reduce(f + g, R) == rf + rg


@given(st.lists(small, min_size=12, max_size=12))
@settings(max_examples=40, deadline=None)
def test_cyclotomic_inverse(coeffs):
    R = cyclotomic_ring()
    a = R.from_coeffs(coeffs)
    if a.is_zero():
        return
    assert a * a.inverse() == R.one()
