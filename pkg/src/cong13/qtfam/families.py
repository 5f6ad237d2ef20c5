"""Two one-parameter families of 13-congruent elliptic curves over Q(t).

For each family E(t): y^2 = x^3 + a(t) x + b(t) carries a rational point on
X_E(13, k) (k = 1 for the direct family, k = 2 for the skew family) whose
image under the j-map is j'(t).  Only the leading and trailing coefficients
of g2 are known a priori; the full polynomial is recovered as an exact square
root from the two expressions for j'.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..exactalg import NotASquare, exact_poly_sqrt
from ..exactalg.poly import SparsePoly
from ..elliptic import EllipticCurveQ, SingularCurve

DIR = "dir"
SKEW = "skew"
KINDS = (DIR, SKEW)
TVARS = ("t",)


def _p(text: str) -> SparsePoly:
    return SparsePoly.parse(text, TVARS)


_DIR_TEXT = {
    "p": "t^2 - 3*t - 1",
    "q": "t^3 - 2*t^2 - 3*t - 8",
    "r": "t^3 + t^2 + 2*t - 1",
    "f1": "t^7 + 4*t^6 + 8*t^5 + 6*t^4 - 8*t^3 - 24*t^2 - 27*t - 8",
    "f2": ("t^11 + 4*t^10 + 5*t^9 - 12*t^8 - 63*t^7 - 124*t^6 - 137*t^5 - 80*t^4 - 61*t^3 - 72*t^2"
           " - 153*t + 8"),
    "g1": ("t^31 + 23*t^30 + 270*t^29 + 2379*t^28 + 17607*t^27 + 110676*t^26 + 586710*t^25"
           " + 2624262*t^24 + 9977316*t^23 + 32555542*t^22 + 92002244*t^21 + 226872066*t^20"
           " + 490871649*t^19 + 935166681*t^18 + 1571157252*t^17 + 2326844467*t^16"
           " + 3029704865*t^15 + 3450459162*t^14 + 3407984048*t^13 + 2880044002*t^12"
           " + 2037108963*t^11 + 1159162859*t^10 + 486247810*t^9 + 109783239*t^8"
           " - 25731445*t^7 - 37205624*t^6 - 17036352*t^5 - 3782272*t^4 - 99968*t^3"
           " + 90624*t^2 + 50176*t + 8192"),
    "d": ("t^4*(t + 2)^3*(t^4 + 4*t^3 + 9*t^2 + 11*t + 8)"
          "*(t^6 + 4*t^5 + 9*t^4 + 8*t^3 + 2*t^2 - 9*t - 6)^13"),
}
# the point on X_E(13,1), coordinates x1..x7
_DIR_POINT = (
    "2592*t*(t + 1)*(t^2 + 2*t + 3)*p^2*q*r^2",
    "-432*t^2*(2*t^2 + 3*t + 7)*p^2*q*r^2",
    "-72*(t^3 + 2*t^2 + 4*t - 1)*p^2*q*r",
    "72*p^2*q*r",
    "-6*(t^6 - 3*t^4 - 11*t^3 - 14*t^2 - 5*t - 4)*p",
    "-24*(t - 1)*p*r",
    "t - 1",
)
_SKEW_TEXT = {
    "p": "t^2 + t + 1",
    "q": "5*t^2 + 8*t + 11",
    "f1": "t^4 - 13*t^3 - 4*t^2 - 5*t + 1",
    "f2": ("59*t^9 + 183*t^8 + 477*t^7 + 315*t^6 + 54*t^5 - 570*t^4 - 499*t^3 - 429*t^2"
           " - 123*t - 43"),
    "g1": ("211*t^14 + 665*t^13 + 1079*t^12 + 414*t^11 - 1754*t^10 - 5658*t^9 - 9756*t^8"
           " - 12536*t^7 - 12796*t^6 - 10606*t^5 - 7358*t^4 - 4030*t^3 - 1831*t^2 - 553*t - 131"),
    "d": "(t + 1)*(t^2 + 1)*(2*t^2 + t + 1)^2*(2*t^3 + 2*t^2 + 3*t + 1)^13",
    "r1": "29*t^7 + 15*t^6 + 7*t^5 - 32*t^4 + 89*t^3 + 73*t^2 + 83*t + 24",
    "r2": "55*t^7 + 117*t^6 + 269*t^5 + 356*t^4 + 211*t^3 + 179*t^2 + 25*t + 36",
    "r3": "t^6 - 14*t^5 - 43*t^4 - 85*t^3 - 106*t^2 - 53*t - 36",
    "r4": "13*t^5 + 34*t^4 + 17*t^3 + 11*t^2 - 22*t - 5",
}
_SKEW_POINT = ("-2*p*q*r1", "p*q*r2", "2*r3", "-24*(t + 1)^2*(t^2 + 1)^2", "t*r4", "2*t", "0")

# published coefficients of g2: {exponent: coefficient}
G2_PUBLISHED = {
    DIR: {46: 1, 45: 34, 44: 586, 2: -10680320, 1: -2752512, 0: -262144},
    SKEW: {23: 3107, 22: 45563, 21: 257591, 1: 35789, 0: 4973},
}
G2_DEGREE = {DIR: 46, SKEW: 23}

# (t, label or conductor of E, label or conductor of E', isogeny degree or None)
TABLE4 = (
    ("1", "11a3", "11a2", 25), ("-1", "768h1", "768h4", 10), ("4", "13688b1", "8363368*", None),
    ("2", "27930s1", "27930r1", None), ("-4", "80408l1", "8282024*", None),
    ("-1/2", "83030b1", "913330*", None), ("-1/3", "271545f1", "589524195*", None),
    ("1/2", "5429670*", "320350530*", None), ("1/4", "7707798*", "27925352154*", None),
    ("-3", "15211515*", "1566786045*", None), ("8/5", "46427580*", "5448415795740*", None),
    ("3", "48963840*", "42941287680*", None), ("5", "147656145*", "1624217595*", None),
    ("7/2", "192105606*", "23030964786522*", None), ("5/2", "774703710*", "6034167197190*", None),
    ("7", "1040014080*", "24181367374080*", None),
)
TABLE5 = (
    ("0", "121c1", "121c2", 11), ("1", "162c1", "162c4", 21), ("-1/3", "1225h1", "1225h2", 37),
    ("-3", "1960i1", "21560l1", None), ("-2", "14175k1", "184275o1", None),
    ("1/3", "23660f1", "733460*", None), ("-3/4", "92950q1", "2881450*", None),
    ("-1/2", "98010s1", "98010t1", None), ("3", "185900a1", "7621900*", None),
    ("-7", "255162e1", "4848078*", None), ("1/2", "1242150*", "1242150*", None),
    ("1/7", "1695978*", "429082434*", None), ("-3/2", "2141594*", "49256662*", None),
    ("-3/5", "2147950*", "2147950*", None), ("-5", "4746924*", "507920868*", None),
    ("1/5", "7495800*", "397277400*", None),
)
TABLES = {DIR: TABLE4, SKEW: TABLE5}


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    polys: dict  # name -> SparsePoly in t
    point: tuple[SparsePoly, ...]
    g2: SparsePoly

    @property
    def k(self) -> int:
        return 1 if self.kind == DIR else 2

    def __getitem__(self, name: str) -> SparsePoly:
        if name == "g2":
            return self.g2
        return self.polys[name]

    # a(t), b(t) for E and A(t), B(t) for E'
    def a(self) -> SparsePoly:
        P = self.polys
        if self.kind == DIR:
            return P["p"] ** 2 * P["q"] * P["f1"] * (-3)
        return P["p"] * P["q"] ** 2 * P["f1"] * (-3)

    def b(self) -> SparsePoly:
        P = self.polys
        if self.kind == DIR:
            return P["p"] ** 2 * P["q"] ** 2 * P["f2"] * 2
        return P["p"] * P["q"] ** 2 * P["f2"] * 2

    def a_prime(self) -> SparsePoly:
        P = self.polys
        if self.kind == DIR:
            return P["p"] ** 3 * P["q"] ** 3 * P["g1"] * (-3)
        return P["p"] * P["q"] ** 3 * P["g1"] * 3

    def b_prime(self) -> SparsePoly:
        P = self.polys
        if self.kind == DIR:
            return P["p"] ** 4 * P["q"] ** 5 * self.g2 * 2
        return P["p"] * P["q"] ** 4 * self.g2 * 2

    def j_prime_numerator_denominator(self) -> tuple[SparsePoly, SparsePoly]:
        """j'(t) = N / D: p g1^3 / (r d) (direct) or p q g1^3 / d (skew)."""
        P = self.polys
        if self.kind == DIR:
            return P["p"] * P["g1"] ** 3, P["r"] * P["d"]
        return P["p"] * P["q"] * P["g1"] ** 3, P["d"]


def _kind(kind: str) -> str:
    if kind not in KINDS:
        raise FamilyError(f"kind must be one of {KINDS}")
    return kind


def _g2_radicand(kind: str, P: dict) -> SparsePoly:
    if kind == DIR:
        num = P["p"] * P["g1"] ** 3 - P["r"] * P["d"] * 1728
        quo, rem = _divmod_t(num, P["q"])
        if rem:
            raise FamilyError("q does not divide p g1^3 - 1728 r d")
        return quo
    return P["d"] * 1728 - P["p"] * P["q"] * P["g1"] ** 3


def _coeffs(f: SparsePoly) -> list[Fraction]:
    n = f.degree() if f else 0
    return [Fraction(f.coeff((i,))) for i in range(n + 1)]


def _from_coeffs(c: list[Fraction]) -> SparsePoly:
    return SparsePoly.from_dict(TVARS, {(i,): x for i, x in enumerate(c) if x})


def _divmod_t(a: SparsePoly, b: SparsePoly) -> tuple[SparsePoly, SparsePoly]:
    from ..exactalg import upoly

    q, r = upoly.divmod_(_coeffs(a), _coeffs(b))
    return _from_coeffs(list(q)), _from_coeffs(list(r))


def recover_g2(kind: str) -> SparsePoly:
    """g2 as the exact square root of the radicand fixed by the two expressions for j'."""
    kind = _kind(kind)
    text = _DIR_TEXT if kind == DIR else _SKEW_TEXT
    P = {k: _p(v) for k, v in text.items()}
    rad = _g2_radicand(kind, P)
    try:
        g2 = exact_poly_sqrt(rad)
    except NotASquare as exc:
        raise FamilyError(f"radicand is not a square: {exc}") from exc
    lead = G2_PUBLISHED[kind][G2_DEGREE[kind]]
    if Fraction(g2.coeff((g2.degree(),))) * lead < 0:
        g2 = -g2
    return g2


@lru_cache(maxsize=None)
def family_spec(kind: str) -> FamilySpec:
    kind = _kind(kind)
    text = _DIR_TEXT if kind == DIR else _SKEW_TEXT
    P = {k: _p(v) for k, v in text.items()}
    pts = _DIR_POINT if kind == DIR else _SKEW_POINT
    return FamilySpec(kind, P, tuple(_expand_point(c, P) for c in pts), recover_g2(kind))


def _expand_point(text: str, P: dict) -> SparsePoly:
    """Expand a coordinate written in t and the named polynomials into a polynomial in t."""
    names = tuple(P)
    f = SparsePoly.parse(text, TVARS + names)
    return f.substitute([SparsePoly.var(TVARS, "t")] + [P[n] for n in names])


def g2_checks(kind: str) -> dict:
    """The published coefficients and the defining identity for the recovered g2."""
    spec = family_spec(kind)
    g2 = spec.g2
    coeffs = {e: int(Fraction(g2.coeff((e,)))) for e in G2_PUBLISHED[kind]}
    P = spec.polys
    if kind == DIR:
        identity = P["p"] * P["g1"] ** 3 == P["r"] * P["d"] * 1728 + P["q"] * g2 * g2
    else:
        identity = g2 * g2 == P["d"] * 1728 - P["p"] * P["q"] * P["g1"] ** 3
    return {"degree": g2.degree(), "expected_degree": G2_DEGREE[kind], "coefficients": coeffs,
            "published": dict(G2_PUBLISHED[kind]), "coefficients_match": coeffs == G2_PUBLISHED[kind],
            "identity": identity}


# ------------------------------------------------------------------ specialisations


def _at(f: SparsePoly, t: Fraction) -> Fraction:
    return Fraction(f.evaluate([t]))


def family_curves(kind: str, t) -> tuple[EllipticCurveQ, EllipticCurveQ]:
    """(E(t), E'(t)) as short Weierstrass curves; FamilyError if either is singular."""
    spec = family_spec(kind)
    t = Fraction(t)
    try:
        E = EllipticCurveQ.short(_at(spec.a(), t), _at(spec.b(), t))
        Ep = EllipticCurveQ.short(_at(spec.a_prime(), t), _at(spec.b_prime(), t))
    except (SingularCurve, AssertionError, ZeroDivisionError) as exc:
        raise FamilyError(f"singular specialisation at t = {t}") from exc
    return E, Ep


def j_prime(kind: str, t) -> Fraction:
    N, D = family_spec(kind).j_prime_numerator_denominator()
    t = Fraction(t)
    den = _at(D, t)
    if den == 0:
        raise FamilyError(f"j' has a pole at t = {t}")
    return _at(N, t) / den


def family_point(kind: str, t) -> list[Fraction]:
    return [_at(c, Fraction(t)) for c in family_spec(kind).point]
