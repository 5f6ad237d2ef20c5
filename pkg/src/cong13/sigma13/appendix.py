"""The worked example on Sigma and the genus 1 fibre over T = -2.

E_1 and E_2 come from the rational point (17/33, 1, 126340/33^3).  Both admit a
rational 13-isogeny and have isomorphic semi-simplified 13-torsion, so their
traces agree mod 13, yet 17681 is a prime of multiplicative reduction for E_2
with v(Delta) = 1 where E_1 is good, which rules out a 13-congruence.

The fibre T = -2 is Y^2 = f(-1, 6; X).  A rational point on it is found by a
height-bounded search; moving that point to u = 0 gives a quartic with square
constant term, which has an explicit Weierstrass model.  The second point above
the same X maps to a point of that model whose multiples nP for n <= 12 are all
nonzero, so by Mazur's bound on torsion over Q the point has infinite order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from sympy import integer_nthroot

from ..congruence import CONSISTENT, ramification_obstruction, trace_congruence_scan
from ..curvedata import get_curve
from ..elliptic import EllipticCurveQ
from ..exactalg.serialize import rational_str
from .surface import lam_mu, sigma_membership

EXAMPLE_POINT = (Fraction(17, 33), Fraction(1), Fraction(126340, 33 ** 3))
E1_LABEL = "sigma-E1"
E2_LABEL = "sigma-E2"
DELTA_E1 = -3 * 7 ** 2
DELTA_E2 = 3 * 7 ** 2 * 13 ** 13 * 251 ** 13 * 17681
OBSTRUCTING_PRIME = 17681

FIBER_T = Fraction(-2)
# found by fiber_points(-2, 250); the smallest point on the fibre
FIBER_POINT = (Fraction(241, 126), Fraction(1768645, 126 ** 2))
MAZUR_BOUND = 12


def fiber_quartic(T) -> list[Fraction]:
    """Coefficients [c0, ..., c4] of X -> f(lambda(T), mu(T); X)."""
    lam, mu = lam_mu(T)
    first = [Fraction(5), Fraction(-2), Fraction(1)]
    quad = [5 * lam ** 2 - 12 * lam * mu + 72 * mu ** 2, -2 * (lam ** 2 + lam * mu + 6 * mu ** 2),
            lam ** 2 - 2 * lam * mu + 5 * mu ** 2]
    out = [Fraction(0)] * 5
    for i, a in enumerate(first):
        for j, b in enumerate(quad):
            out[i + j] += a * b
    return out


def _quadratic_disc(c: list[Fraction]) -> Fraction:
    return c[1] ** 2 - 4 * c[0] * c[2]


def _resultant_quadratics(f: list[Fraction], g: list[Fraction]) -> Fraction:
    """Resultant of f0 + f1 X + f2 X^2 and g0 + g1 X + g2 X^2."""
    a0, a1, a2 = f
    b0, b1, b2 = g
    return (a2 * b0 - a0 * b2) ** 2 - (a2 * b1 - a1 * b2) * (a1 * b0 - a0 * b1)


def fiber_squarefree(T=FIBER_T) -> dict:
    """Both quadratic factors of the fibre quartic have nonzero discriminant and no common root."""
    lam, mu = lam_mu(T)
    first = [Fraction(5), Fraction(-2), Fraction(1)]
    quad = [5 * lam ** 2 - 12 * lam * mu + 72 * mu ** 2, -2 * (lam ** 2 + lam * mu + 6 * mu ** 2),
            lam ** 2 - 2 * lam * mu + 5 * mu ** 2]
    d1, d2 = _quadratic_disc(first), _quadratic_disc(quad)
    res = _resultant_quadratics(first, quad)
    return {"T": rational_str(Fraction(T)), "lambda": rational_str(lam), "mu": rational_str(mu),
            "quadratic_factor": [rational_str(c) for c in quad],
            "discriminants": [rational_str(d1), rational_str(d2)], "resultant": rational_str(res),
            "squarefree": bool(d1 and d2 and res and quad[2])}


def fiber_points(T=FIBER_T, height: int = 250) -> list[tuple[Fraction, Fraction]]:
    """Rational points (X, Y), Y >= 0, on Y^2 = f(lambda(T), mu(T); X) with X = a/b, |a|, b <= height."""
    c = fiber_quartic(T)
    den = 1
    for x in c:
        den = den * x.denominator // gcd(den, x.denominator)
    ci = [int(x * den) for x in c]
    out = []
    for b in range(1, height + 1):
        for a in range(-height, height + 1):
            if gcd(a, b) != 1:
                continue
            v = sum(ci[k] * a ** k * b ** (4 - k) for k in range(5)) * den
            if v < 0:
                continue
            r = isqrt(v)
            if r * r == v:
                out.append((Fraction(a, b), Fraction(r, b * b * den)))
    return out


# ------------------------------------------------------------------ Weierstrass model through a point


def _shift(c: list[Fraction], x0: Fraction) -> list[Fraction]:
    """Coefficients of X -> c(x0 + u) in u."""
    from math import comb

    n = len(c) - 1
    return [sum(c[k] * comb(k, i) * x0 ** (k - i) for k in range(i, n + 1)) for i in range(n + 1)]


def quartic_to_weierstrass(c: list[Fraction], x0, y0) -> tuple[EllipticCurveQ, tuple[Fraction, Fraction]]:
    """Weierstrass model of Y^2 = c(X) through the point (x0, y0), y0 != 0, and the image of (x0, -y0).

    With u = X - x0 the quartic is v^2 = a u^4 + b u^3 + c u^2 + d u + q^2, q = y0.  The
    substitution x = (2q(v + q) + d u)/u^2, y = (4q^2(v + q) + 2q(d u + c u^2) - d^2 u^2/(2q))/u^3
    gives y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 with a1 = d/q, a2 = c - d^2/(4q^2),
    a3 = 2 q b, a4 = -4 q^2 a, a6 = a2 a4.  (0, q) goes to infinity and (0, -q) to (-a2, 0).
    """
    x0, q = Fraction(x0), Fraction(y0)
    if q == 0:
        raise ValueError("the base point must have nonzero Y")
    e, d, cc, b, a = _shift(c, x0)
    if e != q * q:
        raise ValueError("the base point is not on the quartic")
    a1 = d / q
    a2 = cc - d * d / (4 * q * q)
    a3 = 2 * q * b
    a4 = -4 * q * q * a
    a6 = a2 * a4
    return EllipticCurveQ(a1, a2, a3, a4, a6), (-a2, Fraction(0))


def quartic_jacobian(c: list[Fraction]) -> EllipticCurveQ:
    """y^2 = x^3 - 27 I x - 27 J from the classical invariants of the quartic."""
    E_, D_, C_, B_, A_ = c
    inv_i = 12 * A_ * E_ - 3 * B_ * D_ + C_ ** 2
    inv_j = 72 * A_ * C_ * E_ + 9 * B_ * C_ * D_ - 27 * A_ * D_ ** 2 - 27 * E_ * B_ ** 2 - 2 * C_ ** 3
    return EllipticCurveQ.short(-27 * inv_i, -27 * inv_j)


def _is_power(x: Fraction, n: int) -> bool:
    """x = r^n for some rational r."""
    if x < 0 and n % 2 == 0:
        return False
    return all(integer_nthroot(abs(m), n)[1] for m in (x.numerator, x.denominator))


def isomorphic_over_q(E: EllipticCurveQ, F: EllipticCurveQ) -> bool:
    """c4(F) = u^4 c4(E) and c6(F) = u^6 c6(E) for some rational u."""
    if E.j_invariant != F.j_invariant:
        return False
    if E.c4 and E.c6:
        return _is_power((F.c6 * E.c4) / (E.c6 * F.c4), 2)
    if E.c6 == 0:
        return _is_power(F.c4 / E.c4, 4)
    return _is_power(F.c6 / E.c6, 6)


# ------------------------------------------------------------------ group law


INFINITY = None


def _short(E: EllipticCurveQ):
    """(A, B, forward map) to y^2 = x^3 + A x + B."""
    A, B = E.short_model()
    a1, a3, b2 = E.a1, E.a3, E.b2

    def fwd(P):
        if P is INFINITY:
            return INFINITY
        x, y = P
        return 36 * x + 3 * b2, 108 * (2 * y + a1 * x + a3)
    return A, B, fwd


def _add(A: Fraction, P, Q):
    if P is INFINITY:
        return Q
    if Q is INFINITY:
        return P
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2:
        if y1 + y2 == 0:
            return INFINITY
        slope = (3 * x1 * x1 + A) / (2 * y1)
    else:
        slope = (y2 - y1) / (x2 - x1)
    x3 = slope * slope - x1 - x2
    return x3, slope * (x1 - x3) - y1


def multiples(E: EllipticCurveQ, P, n: int) -> list:
    """[P, 2P, ..., nP] on the short model of E."""
    A, B, fwd = _short(E)
    S = fwd(P)
    x, y = S
    if y * y != x ** 3 + A * x + B:
        raise ValueError("point is not on the curve")
    out, acc = [], INFINITY
    for _ in range(n):
        acc = _add(A, acc, S)
        out.append(acc)
    return out


@dataclass
class NonTorsionCertificate:
    T: Fraction
    base_point: tuple[Fraction, Fraction]
    curve: EllipticCurveQ
    point: tuple[Fraction, Fraction]
    isomorphic_to_jacobian: bool
    nonzero_multiples: int
    passed: bool

    def to_json(self) -> dict:
        return {"T": rational_str(self.T), "fibre_point": [rational_str(c) for c in self.base_point],
                "weierstrass": self.curve.to_json(), "point": [rational_str(c) for c in self.point],
                "isomorphic_to_jacobian": self.isomorphic_to_jacobian,
                "nonzero_multiples": self.nonzero_multiples, "passed": self.passed,
                "note": "order exceeds 12, hence infinite by Mazur's torsion bound"}


def fiber_non_torsion(T=FIBER_T, point=FIBER_POINT) -> NonTorsionCertificate:
    T = Fraction(T)
    c = fiber_quartic(T)
    x0, y0 = point
    E, P = quartic_to_weierstrass(c, x0, y0)
    iso = isomorphic_over_q(E, quartic_jacobian(c))
    mult = multiples(E, P, MAZUR_BOUND)
    nonzero = sum(1 for Q in mult if Q is not INFINITY)
    return NonTorsionCertificate(T, (Fraction(x0), Fraction(y0)), E, P, iso, nonzero,
                                 iso and nonzero == MAZUR_BOUND)


# ------------------------------------------------------------------ the example pair


def appendix_examples(B: int = 10 ** 4) -> dict:
    E1 = get_curve(E1_LABEL).curve
    E2 = get_curve(E2_LABEL).curve
    member = sigma_membership(*EXAMPLE_POINT)
    scan = trace_congruence_scan(E1, E2, 13, B)
    obstruction = ramification_obstruction(E1, E2, 13)
    fibre = fiber_squarefree(FIBER_T)
    lam, mu = lam_mu(FIBER_T)
    checks = {
        "example_point_on_sigma": member.member,
        "delta_E1": E1.discriminant == DELTA_E1,
        "delta_E2": E2.discriminant == DELTA_E2,
        "scan_consistent": scan.verdict == CONSISTENT,
        "obstruction_17681": obstruction.obstructing == [OBSTRUCTING_PRIME],
        "fibre_parameters": (lam, mu) == (-1, 6),
        "fibre_squarefree": fibre["squarefree"],
    }
    return {
        "checks": checks,
        "passed": all(checks.values()),
        "membership": member.to_json(),
        "discriminants": {"E1": rational_str(E1.discriminant), "E2": rational_str(E2.discriminant)},
        "scan": scan.to_json(),
        "obstruction": obstruction.to_json(),
        "fibre": fibre,
    }
