import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cong13.repgroup import (GROUP_ORDER, ORBIT_SIZES, PLAIN, SKEW, CapExceeded, F, Q, UnknownCovariant, cubics_w3,
                             generators, group_closure, group_mod_p, identity, invariant_dimension, m13,
                             named_covariant, registry_json, reynolds_space, special_fields, special_points)
from cong13.repgroup.identities import eval_on_points


@pytest.fixture(scope="module")
def field():
    return special_fields(1)[0]


@pytest.fixture(scope="module")
def group(field):
    return group_mod_p(field.p, field.zeta)


def test_m13_has_order_13():
    M = identity()
    for k in range(1, 14):
        M = M @ m13()
        assert M.is_identity() == (k == 13)


def test_closure_has_order_1092():
    assert len(group_closure()) == GROUP_ORDER == 1092


def test_quadric_and_quartic_are_invariant():
    for g in generators().values():
        rows = g.to_qelem_rows()
        assert not (Q().linear_substitute(rows) - Q())
        assert not (F().linear_substitute(rows) - F())


def test_invariant_dimensions_in_low_degree():
    assert [invariant_dimension(d) for d in range(7)] == [1, 0, 1, 0, 2, 0, 4]
    assert invariant_dimension(1, 1, PLAIN) == 1
    assert invariant_dimension(1, 3, SKEW) == 1
    assert invariant_dimension(0, 3, SKEW) == 0
    assert reynolds_space(2).dimension == 1


def test_reynolds_cap():
    with pytest.raises(CapExceeded):
        reynolds_space(7)


def test_special_points(field):
    for name, size in ORBIT_SIZES.items():
        pts = special_points(name, field)
        assert pts.shape == (size, 7)
        for f in cubics_w3():
            assert not np.any(eval_on_points(f, pts, field.p, field.zeta))


def test_quadric_vanishes_only_at_cusps(field):
    assert not np.any(eval_on_points(Q(), special_points("cusp", field), field.p, field.zeta))
    assert np.all(eval_on_points(Q(), special_points("0", field), field.p, field.zeta))


def test_covariant_registry():
    with pytest.raises(UnknownCovariant):
        named_covariant("v2")
    reg = registry_json()
    assert reg["v3"]["degree"] == 3
    for name in ("v1", "v3", "v4"):
        v = named_covariant(name)
        assert len(v.entries) == 7
        assert {e.degree() for e in v.entries if e} == {v.degree}


@given(st.integers(0, GROUP_ORDER - 1), st.lists(st.integers(0, 10 ** 9), min_size=7, max_size=7),
       st.sampled_from(["v3", "v4"]))
@settings(max_examples=15, deadline=None)
def test_covariance_over_fp(field, group, index, x, name):
    p, zeta = field.p, field.zeta
    g = group[index]
    x = np.array([x], dtype=np.int64) % p
    gx = np.array([[sum(int(g[i, j]) * int(x[0, j]) for j in range(7)) % p for i in range(7)]], dtype=np.int64)
    entries = named_covariant(name).entries
    lhs = [int(eval_on_points(f, gx, p, zeta)[0]) for f in entries]
    vx = [int(eval_on_points(f, x, p, zeta)[0]) for f in entries]
    rhs = [sum(int(g[i, j]) * vx[j] for j in range(7)) % p for i in range(7)]
    assert lhs == rhs
