import io
import re
import json
from fractions import Fraction as F

import pytest

from cong13.curvedata import (CurveNotFound, OfflineError, RemoteSchemaError, all_fixtures, fetch_remote,
                              get_curve, parse_equation)
from cong13.curvedata import store
from cong13.elliptic import conductor


@pytest.fixture
def offline(monkeypatch, tmp_path):
    monkeypatch.delenv("CURVEDB_URL", raising=False)
    monkeypatch.setenv("CURVEDB_CACHE", str(tmp_path))
    return tmp_path


def test_fixture_conductors_match_labels():
    for label, rec in all_fixtures().items():
        m = re.match(r"(\d+)", label)
        if m:
            assert conductor(rec.curve) == int(m.group(1)), label


def test_52a2_fixture():
    rec = get_curve("52a2")
    assert rec.ainvs == (0, 0, 0, -4, -3)
    assert rec.source == "fixture"
    assert "numbering" in rec.note


def test_parse_equation():
    assert parse_equation("y^2 + xy + y = x^3 - x^2 - 10x - 20") == (1, -1, 1, -10, -20)
    assert parse_equation("y^2 = x^3 - 4x - 3") == (0, 0, 0, -4, -3)


def test_unknown_label_offline(offline):
    with pytest.raises(CurveNotFound):
        get_curve("9999z9")
    with pytest.raises(OfflineError):
        fetch_remote("9999z9")


def test_invalid_label(offline):
    with pytest.raises(ValueError):
        fetch_remote("../etc")


class _Response(io.BytesIO):
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


def test_remote_lookup_is_cached(offline, monkeypatch):
    calls = []

    def fake_urlopen(url, timeout):
        calls.append(url)
        return _Response(json.dumps({"data": [{"ainvs": [0, -1, 1, -10, -20]}]}).encode())

    monkeypatch.setenv("CURVEDB_URL", "http://curves.invalid/{label}")
    monkeypatch.setattr(store.urllib.request, "urlopen", fake_urlopen)
    rec = get_curve("11a1")
    assert rec.ainvs == (F(0), F(-1), F(1), F(-10), F(-20))
    assert rec.source == "remote"
    assert calls == ["http://curves.invalid/11a1"]
    assert (offline / "11a1.json").exists()
    monkeypatch.delenv("CURVEDB_URL")
    assert get_curve("11a1").ainvs == rec.ainvs
    assert len(calls) == 1


def test_remote_schema_error(offline, monkeypatch):
    monkeypatch.setenv("CURVEDB_URL", "http://curves.invalid")
    monkeypatch.setattr(store.urllib.request, "urlopen",
                        lambda url, timeout: _Response(json.dumps({"coefficients": [1, 2]}).encode()))
    with pytest.raises(RemoteSchemaError):
        fetch_remote("11a1")
