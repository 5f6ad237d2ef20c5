from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cong13.zsurface import (LISTED_CURVES, SurfaceError, affine_identity_check, check_listed_curves,
                             check_table1, check_table_points, cover_membership, F_poly, F_value, homogeneity_check,
                             table1_check, table1_row, table_points)


@pytest.mark.parametrize("k, deg", [(1, 12), (2, 14)])
def test_degrees_and_homogeneity(k, deg):
    assert F_poly(k).total_degree() == deg
    assert homogeneity_check(k)
    assert affine_identity_check(k)


def test_known_point_value():
    res = cover_membership(1, 4, 5, 3)
    assert res.value == 33385284 and res.root == 5778


@pytest.mark.parametrize("k, n", [(1, 48), (2, 42)])
def test_table_points_lift(k, n):
    results = check_table_points(k)
    assert len(results) == len(table_points(k)) == n
    assert all(r.square for r in results)


def test_non_square_has_certificate():
    res = cover_membership(1, 1, 1, 1)
    assert not res.square
    assert res.certificate["reason"] in ("negative", "odd valuation", "non-residue")


def test_bad_input():
    with pytest.raises(SurfaceError):
        cover_membership(3, 1, 1, 1)
    with pytest.raises(SurfaceError):
        cover_membership(1, 0, 0, 0)


def test_table1_single_row():
    row = table1_row(4)
    assert (row.genus, row.k) == (0, 1)
    assert table1_check(row).passed


def test_table1_complete():
    verdicts = check_table1()
    assert len(verdicts) == 25
    assert all(v.passed for v in verdicts)


@pytest.mark.slow
def test_listed_curves():
    verdicts = check_listed_curves()
    assert len(verdicts) == len(LISTED_CURVES)
    assert all(v.passed for v in verdicts), [v.equation for v in verdicts if not v.passed]


@given(st.sampled_from([1, 2]), st.tuples(*[st.integers(-9, 9)] * 3).filter(any), st.integers(-4, 4).filter(bool))
@settings(max_examples=30, deadline=None)
def test_projective_scaling(k, pt, lam):
    deg = 10 + 2 * k
    assert F_value(k, *(lam * c for c in pt)) == Fr(lam) ** deg * F_value(k, *pt)
    # squareness is a property of the projective point since the degree is even
    assert cover_membership(k, *(lam * c for c in pt)).square == cover_membership(k, *pt).square
