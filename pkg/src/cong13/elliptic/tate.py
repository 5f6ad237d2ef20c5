"""Tate's algorithm, global minimal models and conductors over Z."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint

from .curve import EllipticCurveQ

GOOD = "good"
MULTIPLICATIVE = "multiplicative"
ADDITIVE = "additive"


@dataclass(frozen=True)
class LocalData:
    p: int
    kodaira: str
    conductor_exponent: int
    disc_valuation: int
    reduction: str
    split: bool | None = None

    @property
    def ap_bad(self) -> int:
        """The trace convention at a bad prime: +1 split, -1 nonsplit multiplicative, 0 additive."""
        if self.reduction == MULTIPLICATIVE:
            return 1 if self.split else -1
        return 0

    def to_json(self) -> dict:
        return {"p": self.p, "kodaira": self.kodaira, "f": self.conductor_exponent,
                "v_disc": self.disc_valuation, "reduction": self.reduction, "split": self.split}


@dataclass(frozen=True)
class ConductorData:
    minimal: EllipticCurveQ
    conductor: int
    local: dict[int, LocalData]
    minimal_discriminant: int

    def to_json(self) -> dict:
        return {"minimal_model": self.minimal.to_json(), "conductor": self.conductor,
                "minimal_discriminant": self.minimal_discriminant,
                "local": [self.local[p].to_json() for p in sorted(self.local)]}


def valuation(n: int, p: int) -> int:
    n = int(n)
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _has_root_mod_p(a: int, b: int, c: int, p: int) -> bool:
    """Whether a x^2 + b x + c (a a unit) has a root in F_p."""
    if p == 2:
        return any((a * x * x + b * x + c) % 2 == 0 for x in (0, 1))
    disc = (b * b - 4 * a * c) % p
    return disc == 0 or pow(disc, (p - 1) // 2, p) == 1


def _ints(E: EllipticCurveQ) -> tuple[int, int, int, int, int]:
    return tuple(int(x) for x in E.ainvs)  # type: ignore[return-value]


def tate_local(E: EllipticCurveQ, p: int) -> tuple[LocalData, int]:
    """Local data at p for an integral model, and the number of p-scalings needed to reach a minimal model."""
    if not E.is_integral():
        raise ValueError("Tate's algorithm needs an integral model")
    C = E
    half = 0 if p == 2 else pow(2, -1, p)
    scalings = 0
    while True:
        a1, a2, a3, a4, a6 = _ints(C)
        b2, b4, b6, b8 = (int(C.b2), int(C.b4), int(C.b6), int(C.b8))
        c4, c6 = int(C.c4), int(C.c6)
        disc = int(C.discriminant)
        vD = valuation(disc, p)
        if vD == 0:
            return LocalData(p, "I0", 0, 0, GOOD), scalings
        # move the singular point to (0, 0)
        if p == 2:
            if b2 % 2 == 0:
                r = a4 % 2
                t = (r * (1 + a2 + a4) + a6) % 2
            else:
                r = a3 % 2
                t = (r + a4) % 2
        elif p == 3:
            r = (-b6) % 3 if b2 % 3 == 0 else (-b2 * b4) % 3
            t = (a1 * r + a3) % 3
        else:
            if c4 % p == 0:
                r = (-pow(12, -1, p) * b2) % p
            else:
                r = (-pow(12 * c4, -1, p) * (c6 + b2 * c4)) % p
            t = (-half * (a1 * r + a3)) % p
        C = C.rst(r, 0, t)
        a1, a2, a3, a4, a6 = _ints(C)
        b2, b4, b6, b8 = (int(C.b2), int(C.b4), int(C.b6), int(C.b8))
        if c4 % p:
            split = _has_root_mod_p(1, a1, -a2, p)
            return LocalData(p, f"I{vD}", 1, vD, MULTIPLICATIVE, split), scalings
        if a6 % (p * p):
            return LocalData(p, "II", vD, vD, ADDITIVE), scalings
        if b8 % p ** 3:
            return LocalData(p, "III", vD - 1, vD, ADDITIVE), scalings
        if b6 % p ** 3:
            return LocalData(p, "IV", vD - 2, vD, ADDITIVE), scalings
        # now arrange p | a1, a2; p^2 | a3, a4; p^3 | a6
        if p == 2:
            s = a2 % 2
            t = 2 * ((a6 // 4) % 2)
        else:
            s = (-a1 * half) % p
            t = (-a3 * pow(2, -1, p * p)) % (p * p)
        C = C.rst(0, s, t)
        a1, a2, a3, a4, a6 = _ints(C)
        b, c, d = a2 // p, a4 // p ** 2, a6 // p ** 3
        w = 27 * d * d - b * b * c * c + 4 * b ** 3 * d - 18 * b * c * d + 4 * c ** 3
        x = 3 * c - b * b
        if w % p:
            return LocalData(p, "I0*", vD - 4, vD, ADDITIVE), scalings
        if x % p:
            # one double root: move it to 0 and run the I_m* subprocedure
            if p == 2:
                r = c
            elif p == 3:
                r = b * c
            else:
                r = (b * c - 9 * d) * pow(2 * x, -1, p)
            C = C.rst(p * (r % p), 0, 0)
            ix, iy, mx, my = 3, 3, p * p, p * p
            while True:
                a1, a2, a3, a4, a6 = _ints(C)
                a2t, a3t, a4t, a6t = a2 // p, a3 // my, a4 // (p * mx), a6 // (mx * my)
                if (a3t * a3t + 4 * a6t) % p:
                    break
                tt = a6t if p == 2 else (-a3t * half)
                C = C.rst(0, 0, my * (tt % p))
                my *= p
                iy += 1
                a1, a2, a3, a4, a6 = _ints(C)
                a2t, a4t, a6t = a2 // p, a4 // (p * mx), a6 // (mx * my)
                if (a4t * a4t - 4 * a2t * a6t) % p:
                    break
                rr = (a6t * a2t) if p == 2 else (-a4t * half * pow(a2t, -1, p))
                C = C.rst(mx * (rr % p), 0, 0)
                mx *= p
                ix += 1
            m = ix + iy - 5
            return LocalData(p, f"I{m}*", vD - m - 4, vD, ADDITIVE), scalings
        # triple root: move it to 0
        if p == 3:
            rp = -d
        elif p == 2:
            rp = c
        else:
            rp = -b * pow(3, -1, p)
        C = C.rst(p * (rp % p), 0, 0)
        a1, a2, a3, a4, a6 = _ints(C)
        x3t, x6t = a3 // p ** 2, a6 // p ** 4
        if (x3t * x3t + 4 * x6t) % p:
            return LocalData(p, "IV*", vD - 6, vD, ADDITIVE), scalings
        tt = x6t if p == 2 else x3t * half
        C = C.rst(0, 0, -p * p * (tt % p))
        a1, a2, a3, a4, a6 = _ints(C)
        if a4 % p ** 4:
            return LocalData(p, "III*", vD - 7, vD, ADDITIVE), scalings
        if a6 % p ** 6:
            return LocalData(p, "II*", vD - 8, vD, ADDITIVE), scalings
        # non-minimal at p: scale down and start again
        C = C.rst(0, 0, 0, p)
        scalings += 1


def model_from_c4c6(c4: int, c6: int) -> EllipticCurveQ:
    """The reduced integral model (a1, a3 in {0,1}, a2 in {-1,0,1}) with the given c4, c6."""
    b2 = (-c6) % 12
    if b2 > 5:
        b2 -= 12
    b4, r = divmod(b2 * b2 - c4, 24)
    if r:
        raise ArithmeticError("c4, c6 do not come from an integral model")
    b6, r = divmod(-b2 ** 3 + 36 * b2 * b4 - c6, 216)
    if r:
        raise ArithmeticError("c4, c6 do not come from an integral model")
    a1 = b2 % 2
    a2 = (b2 - a1) // 4
    a3 = b6 % 2
    a4 = (b4 - a1 * a3) // 2
    a6 = (b6 - a3) // 4
    E = EllipticCurveQ(a1, a2, a3, a4, a6)
    if E.c4 != c4 or E.c6 != c6:
        raise ArithmeticError("reconstruction from c4, c6 failed")
    return E


def prime_support(n: int, hint=()) -> list[int]:
    """Primes dividing n; primes in ``hint`` are divided out before factoring the cofactor."""
    n = abs(int(n))
    out = set()
    for p in hint:
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
    if n > 1:
        out.update(factorint(n))
    return sorted(out)


def tate_conductor(E: EllipticCurveQ) -> ConductorData:
    """Global minimal model, conductor and local data at every bad prime."""
    cached = E._cache.get("tate")
    if cached is not None:
        return cached
    Ei = E.integral_model()
    disc = int(Ei.discriminant)
    hint = E._cache.get("prime_hint", ())
    support = prime_support(disc, hint)
    u = 1
    for p in support:
        _, k = tate_local(Ei, p)
        u *= p ** k
    c4, c6 = int(Ei.c4) // u ** 4, int(Ei.c6) // u ** 6
    if Fraction(int(Ei.c4), u ** 4) != c4 or Fraction(int(Ei.c6), u ** 6) != c6:
        raise ArithmeticError("minimal scaling is not integral")
    M = model_from_c4c6(c4, c6)
    dmin = int(M.discriminant)
    local: dict[int, LocalData] = {}
    N = 1
    for p in (q for q in support if dmin % q == 0):
        ld, k = tate_local(M, p)
        if k:
            raise ArithmeticError(f"model is not minimal at {p}")
        local[p] = ld
        N *= p ** ld.conductor_exponent
    out = ConductorData(M, N, local, dmin)
    E._cache["tate"] = out
    M._cache["tate"] = out
    return out


def minimal_model(E: EllipticCurveQ) -> EllipticCurveQ:
    return tate_conductor(E).minimal


def conductor(E: EllipticCurveQ) -> int:
    return tate_conductor(E).conductor
