"""Curve fixtures, equation parsing and a cached remote client.

Remote access is off unless ``CURVEDB_URL`` is set.  The URL may contain a
``{label}`` placeholder; otherwise ``/<label>`` is appended.  Responses are
cached as CurveRecord JSON in ``CURVEDB_CACHE`` (default
``~/.cache/cong13/curves``), and the cache is consulted before the network.
"""
from __future__ import annotations

import json
import os
import re
import tempfile
import threading
import urllib.error
import urllib.request
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from ..elliptic import EllipticCurveQ

FIXTURE = "fixture"
REMOTE = "remote"
USER = "user"

_WRITE_LOCK = threading.Lock()
_LABEL_RE = re.compile(r"^[A-Za-z0-9.*\-]+$")


class CurveNotFound(KeyError):
    pass


class OfflineError(RuntimeError):
    pass


class RemoteSchemaError(ValueError):
    pass


@dataclass(frozen=True)
class CurveRecord:
    label: str
    ainvs: tuple[Fraction, ...]
    source: str
    equation: str | None = None
    retrieved_at: str | None = None
    note: str | None = None

    @property
    def curve(self) -> EllipticCurveQ:
        return EllipticCurveQ(*self.ainvs)

    def to_json(self) -> dict:
        from ..exactalg.serialize import rational_str

        out = {"label": self.label, "ainvs": [rational_str(a) for a in self.ainvs], "source": self.source}
        for key in ("equation", "retrieved_at", "note"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        return out

    @classmethod
    def from_json(cls, d: dict) -> "CurveRecord":
        ainvs = tuple(Fraction(str(a)) for a in d["ainvs"])
        if len(ainvs) != 5:
            raise RemoteSchemaError("ainvs must have five entries")
        return cls(d["label"], ainvs, d.get("source", USER), d.get("equation"),
                   d.get("retrieved_at"), d.get("note"))


_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*(x\^3|x\^2|xy|x|y\^2|y)?")


def parse_equation(eq: str) -> tuple[Fraction, ...]:
    """Coefficients [a1, a2, a3, a4, a6] of 'y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6'."""
    s = eq.replace(" ", "").replace("*", "")
    if s.count("=") != 1:
        raise ValueError(f"not an equation: {eq!r}")
    lhs, rhs = s.split("=")

    def terms(side: str) -> dict[str, int]:
        out: dict[str, int] = {}
        pos = 0
        while pos < len(side):
            m = _TERM_RE.match(side, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {side[pos:]!r}")
            sign, num, mono = m.groups()
            if not num and not mono:
                raise ValueError(f"cannot parse {side[pos:]!r}")
            c = int(num) if num else 1
            out[mono or "1"] = out.get(mono or "1", 0) + (-c if sign == "-" else c)
            pos = m.end()
        return out

    L, R = terms(lhs), terms(rhs)
    if L.get("y^2") != 1 or R.get("x^3") != 1 or set(L) - {"y^2", "xy", "y"} or set(R) - {"x^3", "x^2", "x", "1"}:
        raise ValueError(f"not a Weierstrass equation: {eq!r}")
    return tuple(Fraction(v) for v in (L.get("xy", 0), R.get("x^2", 0), L.get("y", 0), R.get("x", 0), R.get("1", 0)))


@lru_cache(maxsize=1)
def _fixture_data() -> dict:
    return json.loads(resources.files("cong13.curvedata").joinpath("curves.json").read_text())


def all_fixtures() -> dict[str, CurveRecord]:
    data = _fixture_data()
    out = {}
    for d in data["curves"] + data["derived"]:
        rec = CurveRecord(d["label"], tuple(Fraction(a) for a in d["ainvs"]), FIXTURE,
                          d.get("equation"), None, d.get("note") or d.get("derivation"))
        out[rec.label] = rec
    return out


def fixture_claims() -> dict[str, dict]:
    """Per-label quantities (conductor, discriminant, j) stated alongside the fixtures."""
    data = _fixture_data()
    keys = ("conductor", "discriminant", "j")
    return {d["label"]: {k: d[k] for k in keys if k in d} for d in data["curves"] + data["derived"]}


def _cache_dir() -> Path:
    return Path(os.environ.get("CURVEDB_CACHE") or Path.home() / ".cache" / "cong13" / "curves")


def _cache_path(label: str) -> Path:
    if not _LABEL_RE.match(label):
        raise ValueError(f"invalid label {label!r}")
    return _cache_dir() / f"{label}.json"


def _read_cache(label: str) -> CurveRecord | None:
    path = _cache_path(label)
    if not path.exists():
        return None
    return CurveRecord.from_json(json.loads(path.read_text()))


def _write_cache(rec: CurveRecord) -> None:
    path = _cache_path(rec.label)
    with _WRITE_LOCK:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(rec.to_json(), fh, sort_keys=True)
        os.replace(tmp, path)


def _remote_url(label: str) -> str | None:
    base = os.environ.get("CURVEDB_URL")
    if not base:
        return None
    return base.format(label=label) if "{label}" in base else base.rstrip("/") + "/" + label


def _ainvs_from_payload(payload) -> list:
    """Accept {"ainvs": [...]}, {"a1": .., "a6": ..} or {"data": [{"ainvs": [...]}]}."""
    if isinstance(payload, dict) and "data" in payload and isinstance(payload["data"], list):
        if not payload["data"]:
            raise CurveNotFound("remote returned no records")
        payload = payload["data"][0]
    if isinstance(payload, dict) and "ainvs" in payload:
        ainvs = payload["ainvs"]
    elif isinstance(payload, dict) and all(k in payload for k in ("a1", "a2", "a3", "a4", "a6")):
        ainvs = [payload[k] for k in ("a1", "a2", "a3", "a4", "a6")]
    else:
        raise RemoteSchemaError("response has no recognisable curve coefficients")
    if not isinstance(ainvs, list) or len(ainvs) != 5:
        raise RemoteSchemaError("ainvs must be a list of five numbers")
    try:
        return [Fraction(str(a)) for a in ainvs]
    except (ValueError, ZeroDivisionError) as exc:
        raise RemoteSchemaError(f"bad coefficient: {exc}") from exc


def fetch_remote(label: str, timeout: float = 20.0) -> CurveRecord:
    """Cached remote lookup; raises OfflineError on a cache miss when the network is unavailable."""
    cached = _read_cache(label)
    if cached is not None:
        return cached
    url = _remote_url(label)
    if url is None:
        raise OfflineError(f"{label!r} is not cached and CURVEDB_URL is not set")
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            payload = json.loads(resp.read().decode("utf-8"))
    except (urllib.error.URLError, OSError) as exc:
        raise OfflineError(f"could not reach {url}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise RemoteSchemaError(f"response is not JSON: {exc}") from exc
    ainvs = _ainvs_from_payload(payload)
    EllipticCurveQ(*ainvs)  # validates nonsingularity
    rec = CurveRecord(label, tuple(ainvs), REMOTE,
                      retrieved_at=datetime.now(timezone.utc).isoformat(timespec="seconds"))
    _write_cache(rec)
    return rec


def get_curve(label: str) -> CurveRecord:
    """Fixture hit, else remote (cache first) when enabled, else CurveNotFound."""
    fixtures = all_fixtures()
    if label in fixtures:
        return fixtures[label]
    try:
        return fetch_remote(label)
    except OfflineError as exc:
        raise CurveNotFound(f"unknown curve label {label!r}") from exc
