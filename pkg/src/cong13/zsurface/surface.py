"""The double covers y^2 = F_k(r, s, 1) birational to Z(13, k), k = 1, 2."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Sequence

import sympy as sp

r, s, z = sp.symbols("r s z")

H_TEXT = {
    1: "s**4 + (2*r**2 - 5*r + 7)*s**3 + (r**4 - 3*r**3 - 14*r**2 + r + 16)*s**2"
       " + r**2*(2*r**3 - 5*r**2 + 15*r + 27)*s + r**4*(r**2 - 1)",
    2: "r**3*s**4 + r*(2*r**3 + 7*r**2 + 1)*s**3 + (r**5 + 7*r**4 + 9*r**3 + r**2 + 1)*s**2"
       " + 2*(r**3 + 2*r + 1)*s + r + 1",
}
G_TEXT = {
    1: "4*(7*r - 8)*s**6 + 22*(r - 2)*s**5 - (28*r**5 + 24*r**4 - 2*r**3 - 39*r**2 + 2*r + 68)*s**4"
       " + r**2*(84*r**3 + 233*r**2 - 116*r - 223)*s**3 - r**4*(20*r**2 + 181*r + 181)*s**2"
       " - 4*r**6*(r - 1)*(7*r + 3)*s",
    2: "2*r**4*(5*r + 4)*s**7 + r**3*(19*r**3 + 48*r**2 + 33*r + 22)*s**6"
       " + r**2*(8*r**5 + 40*r**4 + 79*r**3 + 82*r**2 + 47*r + 21)*s**5"
       " - r*(r**7 - 29*r**5 - 91*r**4 - 75*r**3 - 53*r**2 - 34*r - 7)*s**4"
       " + r*(6*r**6 + 35*r**5 + 50*r**4 + 37*r**3 + 42*r**2 + 22*r + 10)*s**3"
       " + r*(14*r**4 + 33*r**3 + 30*r**2 + 14*r + 1)*s**2 + r**2*(10*r + 13)*s + 2*r",
}
D_TEXT = {
    1: "s**5*(r + s - 1)**4*(r**2 + s - 1)**2*(r**4 + r**3*s - r**3 + r*s**2 - r*s - s**2 + s)**13",
    2: "-r**6*(r**2 + r*s + r + 1)**3*(r**3*s + r**2*s**2 + 2*r**2*s + r*s**2 + r*s + r + s)**13",
}
# the factor of D_k with multiplicity 13
DELTA_TEXT = {
    1: "r**4 + r**3*s - r**3 + r*s**2 - r*s - s**2 + s",
    2: "r**3*s + r**2*s**2 + 2*r**2*s + r*s**2 + r*s + r + s",
}


class SurfaceError(ValueError):
    pass


def _k(k: int) -> int:
    if k not in (1, 2):
        raise SurfaceError("k must be 1 or 2")
    return k


@dataclass(frozen=True)
class SurfaceModel:
    k: int
    h: sp.Expr
    g: sp.Expr
    F: sp.Poly  # homogeneous in (r, s, z)
    D: sp.Expr

    @property
    def degree(self) -> int:
        return 10 + 2 * self.k

    def F_affine(self) -> sp.Expr:
        return sp.expand(self.h ** 2 + 4 * self.g)


@lru_cache(maxsize=None)
def surface_model(k: int) -> SurfaceModel:
    k = _k(k)
    h = sp.sympify(H_TEXT[k], locals={"r": r, "s": s})
    g = sp.sympify(G_TEXT[k], locals={"r": r, "s": s})
    D = sp.sympify(D_TEXT[k], locals={"r": r, "s": s})
    aff = sp.Poly(sp.expand(h ** 2 + 4 * g), r, s)
    deg = 10 + 2 * k
    if aff.total_degree() > deg:
        raise SurfaceError(f"h^2 + 4g has degree {aff.total_degree()} > {deg}")
    hom = sp.Poly(sum(c * r ** i * s ** j * z ** (deg - i - j) for (i, j), c in aff.terms()), r, s, z)
    return SurfaceModel(k, h, g, hom, D)


def F_poly(k: int) -> sp.Poly:
    return surface_model(k).F


def F_value(k: int, x, y, w) -> Fraction:
    val = F_poly(k).eval({r: sp.Rational(x), s: sp.Rational(y), z: sp.Rational(w)})
    return Fraction(int(sp.numer(val)), int(sp.denom(val)))


def rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


@dataclass(frozen=True)
class CoverResult:
    k: int
    point: tuple[Fraction, Fraction, Fraction]
    value: Fraction
    square: bool
    root: Fraction | None
    certificate: dict | None

    def to_json(self) -> dict:
        from ..exactalg.serialize import rational_str

        out = {"k": self.k, "point": [rational_str(c) for c in self.point], "F": rational_str(self.value),
               "square": self.square}
        if self.root is not None:
            out["Y"] = rational_str(self.root)
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def _nonsquare_certificate(v: Fraction) -> dict:
    """A reason v is not a rational square: negative sign, or a prime (or p = -1 mod) with odd valuation."""
    if v < 0:
        return {"reason": "negative"}
    if v == 0:
        return {"reason": "zero"}
    n = v.numerator * v.denominator
    for p in sp.primerange(2, 10 ** 4):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                return {"reason": "odd valuation", "prime": int(p), "valuation": e}
    # otherwise a quadratic non-residue witness
    m = v.numerator * v.denominator
    for p in sp.primerange(3, 10 ** 5):
        if m % p and sp.legendre_symbol(m % p, p) == -1:
            return {"reason": "non-residue", "prime": int(p)}
    return {"reason": "not a perfect square"}


def cover_membership(k: int, x, y, w) -> CoverResult:
    """Evaluate F_k at (x : y : w) and return the rational square root Y when it exists."""
    pt = tuple(Fraction(c) for c in (x, y, w))
    if not any(pt):
        raise SurfaceError("(0 : 0 : 0) is not a projective point")
    v = F_value(k, *pt)
    root = rational_sqrt(v)
    if root is not None and v != 0:
        return CoverResult(_k(k), pt, v, True, root, None)
    if v == 0:
        return CoverResult(_k(k), pt, v, True, Fraction(0), {"reason": "on the branch curve F_k = 0"})
    return CoverResult(_k(k), pt, v, False, None, _nonsquare_certificate(v))


def homogeneity_check(k: int) -> bool:
    lam = sp.Symbol("lam")
    F = F_poly(k).as_expr()
    scaled = F.subs({r: lam * r, s: lam * s, z: lam * z}, simultaneous=True)
    return sp.expand(scaled - lam ** (10 + 2 * k) * F) == 0


def affine_identity_check(k: int) -> bool:
    m = surface_model(k)
    return sp.expand(m.F.as_expr().subs(z, 1) - m.F_affine()) == 0


# ------------------------------------------------------------------ known points

TABLE_POINTS: dict[int, tuple[tuple[int, int, int], ...]] = {
    1: (
        (2, 1, -3), (15, -63, 4), (104, -481, 64), (-5110, 5329, 1176),
        (-3, 4, 3), (60, -65, 16), (680, -175, 289), (6552, -1352, 2835),
        (-2, 5, 4), (30, 68, 63), (630, 685, -324), (-6920, 8477, 4800),
        (4, 5, 3), (21, -1, 98), (440, -48, 1085), (2470, 9025, 7436),
        (3, 1, -6), (-51, 136, 111), (495, 81, -1144), (-4389, 9386, 9702),
        (-6, 11, 9), (-78, 172, 169), (442, 1224, 1183), (7259, 1525, 9996),
        (-12, 16, 9), (39, 169, 180), (1430, -1469, 225), (3105, 13225, 994),
        (14, 4, -21), (-56, 256, 245), (280, -1656, 49), (13340, 4205, -5819),
        (-5, 23, 6), (-17, 289, 20), (-1326, 2312, 1521), (10540, 289, -26908),
        (-15, 25, 18), (95, -7, 418), (3540, -3481, 144), (-34086, 34385, 3249),
        (38, 7, 12), (455, 169, 294), (1309, -3757, 588), (8015, 58166, -833),
        (15, -40, 9), (476, 289, 240), (4144, -999, 2695), (-220836, 913936, 859705),
    ),
    2: (
        (1, 6, 2), (-9, 40, 30), (-1176, 1331, 231), (7546, 1350, -735),
        (-8, 5, 4), (-40, 27, 24), (1445, -216, 510), (-1682, 1331, 11484),
        (1, -8, 6), (17, -56, 34), (-532, 2197, 1235), (4563, 12167, 13455),
        (8, -1, 4), (15, -64, 20), (63, 2560, 120), (14175, -1331, 4389),
        (2, -9, 6), (-49, 64, 140), (-1989, 2744, 2730), (1156, -15625, 5525),
        (1, -7, 9), (175, 32, 140), (2975, 1, -255), (13248, -42875, 21840),
        (11, -8, 22), (-64, 343, 280), (925, -2662, 4070), (-78352, 54925, 21580),
        (5, -24, 14), (153, 343, -105), (175, -4608, 3080), (25205, -98304, 47712),
        (27, -1, 12), (-363, 250, 165), (1007, -4913, 2584), (-159367, 109744, 81016),
        (-8, 27, 12), (790, -343, 1106), (-845, 4968, 1482),
        (-20, 27, 30), (-1107, 824, 246), (-5635, 6859, 1995),
    ),
}


def table_points(k: int) -> Sequence[tuple[int, int, int]]:
    return TABLE_POINTS[_k(k)]


def check_table_points(k: int) -> list[CoverResult]:
    return [cover_membership(k, *pt) for pt in table_points(k)]
