"""JSON round-trip for polynomials and scalars."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .poly import SparsePoly, pack
from .rings import GF, QElem, QuotientRing


def scalar_to_json(c) -> dict[str, Any]:
    if isinstance(c, QElem):
        r = c.ring
        out = {
            "modulus": [scalar_to_json(Fraction(m)) for m in r.modulus],
            "coeffs": [scalar_to_json(Fraction(x) if r.p is None else x) for x in c.coeffs()],
        }
        if r.p is not None:
            out["p"] = r.p
        return out
    if isinstance(c, GF):
        return {"num": str(c.v), "den": "1", "p": c.p}
    q = Fraction(c)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def scalar_from_json(d: dict[str, Any]):
    if "modulus" in d:
        p = d.get("p")
        ring = QuotientRing([scalar_from_json(m) for m in d["modulus"]], p=p)
        return ring.from_coeffs([scalar_from_json(x) for x in d["coeffs"]])
    q = Fraction(int(d["num"]), int(d["den"]))
    if "p" in d:
        return GF(int(q.numerator), int(d["p"]))
    return q.numerator if q.denominator == 1 else q


def poly_to_json(f: SparsePoly) -> dict[str, Any]:
    terms = []
    for exp, c in f.items():
        t = {"exp": list(exp)}
        t.update(scalar_to_json(c))
        terms.append(t)
    out: dict[str, Any] = {"vars": list(f.vars), "terms": terms}
    if f.weights is not None:
        out["weights"] = list(f.weights)
    return out


def poly_from_json(d: dict[str, Any]) -> SparsePoly:
    terms = {}
    for t in d["terms"]:
        payload = {k: v for k, v in t.items() if k != "exp"}
        terms[pack(t["exp"])] = scalar_from_json(payload)
    return SparsePoly(d["vars"], terms, weights=d.get("weights"))


def dumps_poly(f: SparsePoly) -> str:
    return json.dumps(poly_to_json(f), sort_keys=True)


def loads_poly(s: str) -> SparsePoly:
    return poly_from_json(json.loads(s))


def rational_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not s:
        raise ValueError("empty rational")
    return Fraction(s)
