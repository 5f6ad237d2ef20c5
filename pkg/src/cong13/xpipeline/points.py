"""Point schemes: finite sets of points whose coordinates live in a Q-algebra.

A scheme is a list of 7-tuples.  Each coordinate is a rational number or an
element of a finite-dimensional Q-algebra (a ``QElem``).  A form vanishes on
the scheme when its value at every tuple is zero in the algebra, so every
tuple contributes ``dim(algebra)`` rational linear conditions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..exactalg import upoly
from ..exactalg.poly import SparsePoly
from ..exactalg.rings import QElem, QuotientRing, ZeroDivisorError, cyclotomic_ring
from .spaces import basis


class SchemeError(ArithmeticError):
    """The scheme cannot be evaluated (for instance a non-unit denominator)."""

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


def _coeffs(x) -> list[Fraction]:
    if isinstance(x, QElem):
        return x.coeffs()
    return [Fraction(x)]


@dataclass
class PointScheme:
    points: list[tuple]
    label: str = ""
    meta: dict = field(default_factory=dict)

    def monomial_values(self, pt: tuple, d: int) -> list:
        vals = []
        for e in basis(d):
            v = 1
            for x, k in zip(pt, e):
                if k:
                    v = v * (x ** k)
            vals.append(v)
        return vals

    def form_rows(self, d: int) -> list[list[Fraction]]:
        rows = []
        for pt in self.points:
            vals = [_coeffs(v) for v in self.monomial_values(pt, d)]
            width = max(len(v) for v in vals)
            for r in range(width):
                rows.append([v[r] if r < len(v) else Fraction(0) for v in vals])
        return rows

    def quadric_rows(self) -> list[list[Fraction]]:
        return self.form_rows(2)

    def vanishes(self, f: SparsePoly) -> bool:
        for pt in self.points:
            val = 0
            for e, c in f.items():
                term = c
                for x, k in zip(pt, e):
                    if k:
                        term = term * (x ** k)
                val = val + term
            if any(_coeffs(val)):
                return False
        return True


# M13 acts on x_0..x_6 with these powers of zeta
M13_WEIGHTS = (0, 1, 4, 3, 12, 9, 10)


def x13_scheme() -> PointScheme:
    """(1:0:...:0) and the M13-orbit of (1:1:...:1).

    The orbit points are (1: z^k: z^3k: z^4k: z^9k: z^10k: z^12k) for
    0 <= k <= 12 with the exponents listed in increasing order; here each
    exponent is placed at the coordinate whose M13 weight it equals, which
    is the ordering in which the resulting cubics agree with ``w3``.
    """
    ring = cyclotomic_ring(13)
    z = ring.gen()
    pts = [tuple([Fraction(1)] + [Fraction(0)] * 6)]
    for k in range(13):
        pts.append(tuple([ring.one()] + [z ** ((w * k) % 13) for w in M13_WEIGHTS[1:]]))
    return PointScheme(pts, "X(13)")


# ---------------------------------------------------------------- twisted points


def _up(text: str) -> list[Fraction]:
    from ..exactalg.algebra import poly_to_upoly

    return poly_to_upoly(SparsePoly.parse(text, ("t",)), 0)


@lru_cache(maxsize=None)
def fricke_polys() -> dict[str, tuple[Fraction, ...]]:
    A = _up("t^2 + 5*t + 13")
    B = _up("t^2 + 6*t + 13")
    C = _up("t^4 + 7*t^3 + 20*t^2 + 19*t + 1")
    D = _up("t^6 + 10*t^5 + 46*t^4 + 108*t^3 + 122*t^2 + 38*t - 1")
    c4 = upoly.mul(upoly.mul(A, B), C)
    c6 = upoly.mul(upoly.mul(A, upoly.mul(B, B)), D)
    common = upoly.mul(upoly.mul(A, A), upoly.power(B, 3))
    return {"A": tuple(A), "B": tuple(B), "c4": tuple(c4), "c6": tuple(c6), "common": tuple(common)}


def fricke_j(t):
    """j = (t^2 + 5t + 13)(t^4 + 7t^3 + 20t^2 + 19t + 1)^3 / t."""
    t = Fraction(t)
    return (t * t + 5 * t + 13) * (t ** 4 + 7 * t ** 3 + 20 * t ** 2 + 19 * t + 1) ** 3 / t


def parameter_polynomial(a, b) -> list[Fraction]:
    """R1(t): the degree-14 polynomial whose roots index the points of the twisted scheme."""
    a, b = Fraction(a), Fraction(b)
    fp = fricke_polys()
    c4, c6 = list(fp["c4"]), list(fp["c6"])
    R = upoly.add(upoly.scale(upoly.power(c4, 3), 27 * b * b), upoly.scale(upoly.mul(c6, c6), 4 * a ** 3))
    q, r = upoly.divmod_(R, list(fp["common"]))
    if any(r):
        raise SchemeError("extraneous factor does not divide the resultant")
    return upoly.monic(q)


def _coordinate_polys(k: int) -> list[SparsePoly]:
    vars = ("s", "t")
    c4 = "((t^2 + 5*t + 13)*(t^2 + 6*t + 13)*(t^4 + 7*t^3 + 20*t^2 + 19*t + 1))"
    AB = "(t^2 + 5*t + 13)*(t^2 + 6*t + 13)"
    if k == 1:
        f4 = f"(-9*s*(t + 1)*{AB})"
        texts = [
            "1",
            "-(t + 1)",
            f"3*s*(t + 2)*{AB}",
            f4,
            f"108*s^2*{AB}*(t^3 + 5*t^2 + 10*t + 2) + 27*s^2*(t + 3)*{c4}",
            f"162*s^2*{AB}*(t^3 + 6*t^2 + 14*t + 7) + 27*s^2*(t + 4)*{c4}",
            f"11664*s^3*(t + 1)*{AB}*(t^2 + 6*t + 13) + 54*s^2*{c4}*{f4}",
        ]
    elif k == 2:
        texts = [
            "2",
            "2*(t + 1)",
            "3*s*(t^2 + 6*t + 13)*(t^3 + 4*t^2 + 8*t - 1)",
            "12*s*(t^2 + 6*t + 13)*(t^2 + 3*t + 5)",
            "6*s*(t^2 + 6*t + 13)*(t^3 + 8*t^2 + 20*t + 7)",
            f"108*s^2*(t + 1)^2*{AB} - 9*s^2*(t + 3)*{c4}",
            f"-216*s^2*(t - 1)*{AB} - 18*s^2*(t + 2)*{c4}",
        ]
    else:
        raise ValueError("k must be 1 or 2")
    return [SparsePoly.parse(x, vars) for x in texts]


def twist_scheme(k: int, a, b) -> PointScheme:
    """The 14 points (f_i(s,t)) or (g_i(s,t)) above E: y^2 = x^3 + a x + b, as one Q[t]/R1 point."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0 or 4 * a ** 3 + 27 * b ** 2 == 0:
        raise SchemeError("twist_scheme needs ab(4a^3 + 27b^2) != 0")
    R1 = parameter_polynomial(a, b)
    ring = QuotientRing(R1, name="t")
    fp = fricke_polys()
    t = ring.gen()
    c4 = ring.from_coeffs(list(fp["c4"]))
    c6 = ring.from_coeffs(list(fp["c6"]))
    try:
        inv, _cert = c6.inverse_with_certificate()
    except ZeroDivisorError as exc:
        raise SchemeError("c6(t) is not a unit modulo R1", getattr(exc, "factor", None)) from exc
    s = c4 * inv * (b / (2 * a))
    coords = []
    for f in _coordinate_polys(k):
        val = ring.zero()
        for (es, et), c in f.items():
            val = val + (s ** es) * (t ** et) * c
        coords.append(val)
    squarefree = upoly.is_squarefree(R1)
    return PointScheme([tuple(coords)], f"twist k={k}", {"R1": R1, "a": a, "b": b, "k": k,
                                                        "squarefree": squarefree, "s": s})
