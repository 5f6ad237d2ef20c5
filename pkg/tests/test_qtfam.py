from fractions import Fraction as Fr

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cong13.congruence import CONSISTENT, trace_congruence_scan
from cong13.qtfam import (DIR, G2_DEGREE, KINDS, SKEW, TABLES, FamilyError, distinct_j_at, family_curves,
                          family_point_check, g2_checks, j_prime, label_conductor, minimal_pair, specialisation_row)


@pytest.mark.parametrize("kind", KINDS)
def test_recovered_g2(kind):
    g = g2_checks(kind)
    assert g["degree"] == G2_DEGREE[kind]
    assert g["coefficients_match"]
    assert g["identity"]


@pytest.mark.parametrize("kind, t", [(SKEW, "1/3"), (DIR, "2")])
def test_family_point_maps_to_j_prime(kind, t):
    v = family_point_check(kind, t)
    assert v.on_model
    assert v.jmap_value == v.j_prime == v.j_of_e_prime
    assert v.passed


def test_label_conductor():
    assert label_conductor("11a3") == 11
    assert label_conductor("8363368*") == 8363368
    with pytest.raises(ValueError):
        label_conductor("abc")


def test_isogenous_row():
    row = specialisation_row(DIR, "1", 2000)
    assert (row.conductor, row.conductor_prime) == (11, 11)
    assert row.isogeny_degree == 25 and row.traces_identical
    assert row.passed


def test_non_isogenous_row():
    row = specialisation_row(SKEW, "-3", 2000)
    assert (row.conductor, row.conductor_prime) == (1960, 21560)
    assert row.verdict == CONSISTENT and row.distinct_j and not row.traces_identical
    assert row.passed


def test_minimal_pair_twist():
    d, E, F = minimal_pair(SKEW, "0")
    assert E.is_integral() and F.is_integral()


def test_errors():
    with pytest.raises(FamilyError):
        family_curves("sideways", 1)
    with pytest.raises(FamilyError):
        specialisation_row(DIR, "123")


@pytest.mark.parametrize("kind", KINDS)
def test_distinct_j(kind):
    assert all(distinct_j_at(kind).values())


def test_tables_have_sixteen_rows():
    assert len(TABLES[DIR]) == len(TABLES[SKEW]) == 16


t_values = st.fractions(min_value=-6, max_value=6, max_denominator=6)


@given(st.sampled_from(KINDS), t_values)
@settings(max_examples=40, deadline=None)
def test_j_prime_is_j_of_second_curve(kind, t):
    try:
        _, Ep = family_curves(kind, t)
        jp = j_prime(kind, t)
    except FamilyError:
        assume(False)
    assert jp == Ep.j_invariant


@pytest.mark.slow
@given(st.sampled_from(KINDS), st.fractions(min_value=-4, max_value=4, max_denominator=3))
@settings(max_examples=6, deadline=None)
def test_specialisations_are_congruent(kind, t):
    try:
        _, E, F = minimal_pair(kind, t)
    except FamilyError:
        assume(False)
    assert trace_congruence_scan(E, F, 13, 300).verdict == CONSISTENT
