"""Trace scans, Tate-curve ramification obstructions and the same-j screen."""
from __future__ import annotations

from dataclasses import dataclass, field

from sympy import primerange

from ..elliptic import EllipticCurveQ, ap_trace, tate_conductor
from ..elliptic.tate import ADDITIVE, GOOD, MULTIPLICATIVE

CONSISTENT = "consistent"
REFUTED = "refuted-at-p"
INCONCLUSIVE = "inconclusive"

EVIDENCE_NOTE = ("consistency of traces up to a finite bound is evidence for a congruence, "
                 "not a proof; no effective bound is applied")
SCREEN_NOTE = "only equality of j-invariants is tested; isogenies are not detected"


def _valid_modulus(n: int) -> int:
    n = int(n)
    if n < 2:
        raise ValueError("modulus must be at least 2")
    return n


@dataclass
class CongruenceReport:
    curves: tuple[EllipticCurveQ, EllipticCurveQ]
    n: int
    bound: int
    primes_checked: int
    verdict: str
    refuting_prime: int | None = None
    residues: tuple[int, int] | None = None
    distinct_j: bool = True
    skipped: list[int] = field(default_factory=list)
    note: str = EVIDENCE_NOTE

    def to_json(self) -> dict:
        out = {
            "curves": [E.to_json() for E in self.curves],
            "n": self.n,
            "bound": self.bound,
            "primes_checked": self.primes_checked,
            "verdict": self.verdict,
            "distinct_j": self.distinct_j,
            "note": self.note,
        }
        if self.refuting_prime is not None:
            out["refuting_prime"] = self.refuting_prime
            out["residues"] = list(self.residues)
        return out


def trace_congruence_scan(E: EllipticCurveQ, F: EllipticCurveQ, n: int = 13,
                          B: int = 10 ** 4) -> CongruenceReport:
    """Compare a_p(E) and a_p(F) mod n at every prime p <= B not dividing n * N(E) * N(F)."""
    n = _valid_modulus(n)
    B = int(B)
    if B < 10:
        raise ValueError("prime bound must be at least 10")
    bad_e, bad_f = tate_conductor(E).local, tate_conductor(F).local
    checked = 0
    skipped = []
    for p in primerange(2, B + 1):
        p = int(p)
        if n % p == 0 or p in bad_e or p in bad_f:
            skipped.append(p)
            continue
        ae, af = ap_trace(E, p).ap, ap_trace(F, p).ap
        checked += 1
        if (ae - af) % n:
            return CongruenceReport((E, F), n, B, checked, REFUTED, p, (ae % n, af % n),
                                    triviality_screen(E, F)["distinct_j"], skipped)
    verdict = CONSISTENT if checked else INCONCLUSIVE
    return CongruenceReport((E, F), n, B, checked, verdict, None, None,
                            triviality_screen(E, F)["distinct_j"], skipped)


@dataclass
class ObstructionReport:
    obstructing: list[int]
    inconclusive: list[int]
    details: dict[int, dict]

    def to_json(self) -> dict:
        return {"obstructing": self.obstructing, "inconclusive": self.inconclusive,
                "details": {str(p): d for p, d in sorted(self.details.items())}}


def _local_kind(data, p: int) -> tuple[str, int]:
    ld = data.local.get(p)
    if ld is None:
        return GOOD, 0
    return ld.reduction, ld.disc_valuation


def ramification_obstruction(E: EllipticCurveQ, F: EllipticCurveQ, n: int = 13) -> ObstructionReport:
    """Primes where one curve is good and the other is multiplicative with n not dividing v_p(Delta_min).

    At such p the n-torsion field of the multiplicative curve is ramified (Tate curve)
    while that of the good curve is not, so the two n-torsion modules cannot agree.
    Configurations involving additive reduction are listed as inconclusive.
    """
    n = _valid_modulus(n)
    de, df = tate_conductor(E), tate_conductor(F)
    obstructing, inconclusive, details = [], [], {}
    for p in sorted(set(de.local) | set(df.local)):
        if p == n:
            # the n-adic Tate-curve criterion does not apply at p = n itself
            ke, _ = _local_kind(de, p)
            kf, _ = _local_kind(df, p)
            inconclusive.append(p)
            details[p] = {"E": ke, "F": kf, "status": INCONCLUSIVE}
            continue
        ke, ve = _local_kind(de, p)
        kf, vf = _local_kind(df, p)
        status = "no-obstruction"
        if ADDITIVE in (ke, kf):
            status = INCONCLUSIVE
        elif ke == GOOD and kf == MULTIPLICATIVE and vf % n:
            status = "obstructs"
        elif kf == GOOD and ke == MULTIPLICATIVE and ve % n:
            status = "obstructs"
        details[p] = {"E": ke, "F": kf, "v_E": ve, "v_F": vf, "status": status}
        if status == "obstructs":
            obstructing.append(p)
        elif status == INCONCLUSIVE:
            inconclusive.append(p)
    return ObstructionReport(obstructing, inconclusive, details)


def triviality_screen(E: EllipticCurveQ, F: EllipticCurveQ) -> dict:
    """Flags whether the two curves share a j-invariant (equal up to twist)."""
    same = E.j_invariant == F.j_invariant
    return {"same_j": same, "distinct_j": not same, "note": SCREEN_NOTE}
