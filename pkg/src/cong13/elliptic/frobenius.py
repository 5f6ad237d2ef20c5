"""Traces of Frobenius by character sums (p > 3) and enumeration (p = 2, 3)."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np
from sympy import isprime, primerange

from .curve import EllipticCurveQ
from .tate import ADDITIVE, GOOD, MULTIPLICATIVE, tate_conductor

MAX_PRIME = 2 ** 20


@dataclass(frozen=True)
class TraceRecord:
    p: int
    ap: int
    type: str

    def __post_init__(self):
        if self.type == GOOD and self.ap * self.ap > 4 * self.p:
            raise ArithmeticError(f"Hasse bound violated: a_{self.p} = {self.ap}")

    def to_json(self) -> dict:
        return {"p": self.p, "ap": self.ap, "type": self.type}


@lru_cache(maxsize=64)
def _chi_table(p: int) -> np.ndarray:
    """chi[v] = Legendre symbol (v | p) for v in [0, p)."""
    chi = -np.ones(p, dtype=np.int64)
    sq = (np.arange(1, p, dtype=np.int64) ** 2) % p
    chi[sq] = 1
    chi[0] = 0
    return chi


def _count_short(A: int, B: int, p: int) -> int:
    """a_p of y^2 = x^3 + A x + B over F_p, p odd."""
    x = np.arange(p, dtype=np.int64)
    v = (x * x % p * x + (A % p) * x + (B % p)) % p
    return -int(_chi_table(p)[v].sum())


def _count_long(ainvs: tuple[int, ...], p: int) -> int:
    """a_p = p + 1 - #E(F_p) by enumerating affine points of the long model."""
    a1, a2, a3, a4, a6 = (a % p for a in ainvs)
    n = 1
    for x in range(p):
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - (x ** 3 + a2 * x * x + a4 * x + a6)) % p == 0:
                n += 1
    return p + 1 - n


def ap_trace(E: EllipticCurveQ, p: int) -> TraceRecord:
    p = int(p)
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if p >= MAX_PRIME:
        raise ValueError(f"p must be below {MAX_PRIME}")
    data = tate_conductor(E)
    M = data.minimal
    if p in data.local:
        ld = data.local[p]
        return TraceRecord(p, ld.ap_bad, ld.reduction)
    ainvs = tuple(int(a) for a in M.ainvs)
    assert all(a.denominator == 1 for a in M.ainvs)
    if p <= 3:
        return TraceRecord(p, _count_long(ainvs, p), GOOD)
    A, B = (int(c) for c in M.short_model())
    return TraceRecord(p, _count_short(A, B, p), GOOD)


def trace_sweep(E: EllipticCurveQ, bound: int, start: int = 2) -> Iterator[TraceRecord]:
    for p in primerange(start, bound + 1):
        yield ap_trace(E, int(p))


def sweep_json_lines(records: Iterable[TraceRecord]) -> str:
    return "".join(json.dumps(r.to_json()) + "\n" for r in records)


def hasse_ok(rec: TraceRecord) -> bool:
    return rec.type != GOOD or rec.ap * rec.ap <= 4 * rec.p


__all__ = ["TraceRecord", "ap_trace", "trace_sweep", "sweep_json_lines", "hasse_ok",
           "GOOD", "MULTIPLICATIVE", "ADDITIVE"]
