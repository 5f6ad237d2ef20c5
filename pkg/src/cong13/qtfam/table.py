"""Specialisations of the two families: points on twist models, conductors and trace scans.

At each parameter value the pair (E(t), E'(t)) is replaced by (E^d, E'^d) where
d is the quadratic twist giving E(t) least conductor; a 13-congruence survives
twisting both sides by the same d, so the minimal pair is the one tabulated.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from ..congruence import CONSISTENT, trace_congruence_scan
from ..elliptic import EllipticCurveQ, ap_trace, minimal_conductor_twist, quadratic_twist, tate_conductor
from ..exactalg.serialize import rational_str
from .families import TABLES, FamilyError, family_curves, family_point, family_spec, j_prime

ACCEPTANCE_T = {"dir": ("1", "-1", "2", "4", "-1/2"), "skew": ("0", "1", "-3", "1/3", "-2")}


def label_conductor(label: str) -> int:
    """The conductor encoded in a Cremona label ("11a3") or a bare "N*" entry."""
    m = re.match(r"(\d+)", label)
    if not m:
        raise ValueError(f"unrecognised curve label {label!r}")
    return int(m.group(1))


@dataclass
class FamilyPointVerdict:
    kind: str
    t: Fraction
    point: list[Fraction]
    on_model: bool
    jmap_value: Fraction | None
    j_prime: Fraction
    j_of_e_prime: Fraction
    passed: bool
    error: str | None = None

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "t": rational_str(self.t),
            "point": [rational_str(c) for c in self.point],
            "on_model": self.on_model,
            "jmap": None if self.jmap_value is None else rational_str(self.jmap_value),
            "j_prime": rational_str(self.j_prime),
            "j_of_e_prime": rational_str(self.j_of_e_prime),
            "passed": self.passed,
        }
        if self.error:
            out["error"] = self.error
        return out


def family_point_check(kind: str, t) -> FamilyPointVerdict:
    """Build X_E(13, k) for E = E(t), test the family point on it and compare its j-map image with j'(t)."""
    from ..xpipeline.models import Cusp, jmap, model_for_curve

    t = Fraction(t)
    spec = family_spec(kind)
    E, Ep = family_curves(kind, t)
    a, b = E.a4, E.a6  # the family curves are already in short form
    pt = family_point(kind, t)
    jp = j_prime(kind, t)
    jE = Fraction(Ep.j_invariant)
    model = model_for_curve(spec.k, a, b)
    on = model.on_curve(pt)
    value, error = None, None
    if on:
        try:
            value = jmap(model, pt)
        except Cusp as exc:
            error = f"cusp: {exc}"
    passed = on and value == jp == jE
    return FamilyPointVerdict(kind, t, pt, on, value, jp, jE, passed, error)


@dataclass
class SpecialisationRow:
    kind: str
    t: Fraction
    twist: int
    curve: EllipticCurveQ
    curve_prime: EllipticCurveQ
    conductor: int
    conductor_prime: int
    label: str
    label_prime: str
    isogeny_degree: int | None
    verdict: str
    primes_checked: int
    traces_identical: bool
    distinct_j: bool
    notes: list[str] = field(default_factory=list)

    @property
    def conductors_match(self) -> bool:
        return (self.conductor, self.conductor_prime) == (label_conductor(self.label),
                                                         label_conductor(self.label_prime))

    @property
    def passed(self) -> bool:
        # tabulated isogeny degrees flag the pairs that are isogenous over Q, whose traces agree exactly
        isogeny_ok = self.traces_identical == (self.isogeny_degree is not None)
        return self.conductors_match and self.verdict == CONSISTENT and isogeny_ok

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "t": rational_str(self.t),
            "twist": self.twist,
            "E": self.curve.to_json(),
            "E_prime": self.curve_prime.to_json(),
            "conductor": self.conductor,
            "conductor_prime": self.conductor_prime,
            "label": self.label,
            "label_prime": self.label_prime,
            "isogeny_degree": self.isogeny_degree,
            "conductors_match": self.conductors_match,
            "verdict": self.verdict,
            "primes_checked": self.primes_checked,
            "traces_identical": self.traces_identical,
            "distinct_j": self.distinct_j,
            "passed": self.passed,
            "notes": self.notes,
        }


def _traces_identical(E: EllipticCurveQ, F: EllipticCurveQ, bad: set[int], B: int) -> bool:
    from sympy import primerange

    return all(ap_trace(E, p).ap == ap_trace(F, p).ap for p in primerange(2, B + 1) if p not in bad)


def minimal_pair(kind: str, t) -> tuple[int, EllipticCurveQ, EllipticCurveQ]:
    """(d, E(t)^d, E'(t)^d) with d minimising the conductor of E(t)^d; both curves minimal."""
    E, Ep = family_curves(kind, t)
    d, Em = minimal_conductor_twist(E)
    return d, Em, tate_conductor(quadratic_twist(Ep, d)).minimal


def specialisation_row(kind: str, t, B: int = 10 ** 4) -> SpecialisationRow:
    t = Fraction(t)
    entry = next((r for r in TABLES[kind] if Fraction(r[0]) == t), None)
    if entry is None:
        raise FamilyError(f"t = {t} is not a tabulated value for the {kind} family")
    _, label, label_prime, deg = entry
    d, E, F = minimal_pair(kind, t)
    cE, cF = tate_conductor(E), tate_conductor(F)
    report = trace_congruence_scan(E, F, 13, B)
    bad = set(cE.local) | set(cF.local)
    same = _traces_identical(E, F, bad, min(B, 200))
    notes = []
    if label.endswith("*") or label_prime.endswith("*"):
        notes.append("entries marked * are identified by conductor only")
    return SpecialisationRow(kind, t, d, E, F, cE.conductor, cF.conductor, label, label_prime, deg,
                             report.verdict, report.primes_checked, same, report.distinct_j, notes)


def specialisation_table(kind: str, B: int = 10 ** 4, ts=None) -> list[SpecialisationRow]:
    values = ts if ts is not None else [r[0] for r in TABLES[kind]]
    return [specialisation_row(kind, t, B) for t in values]


def distinct_j_at(kind: str, ts=("2", "3", "5")) -> dict:
    """j(E(t)) != j(E'(t)) at the given parameters, so the family is not the trivial pair."""
    out = {}
    for t in ts:
        E, Ep = family_curves(kind, t)
        out[str(t)] = Fraction(E.j_invariant) != Fraction(Ep.j_invariant)
    return out
