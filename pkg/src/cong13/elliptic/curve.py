"""Elliptic curves over Q in long Weierstrass form."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence


class SingularCurve(ValueError):
    pass


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class EllipticCurveQ:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, _q(getattr(self, name)))
        if self.discriminant == 0:
            raise SingularCurve("discriminant is zero")
        if self.j_invariant * self.discriminant != self.c4 ** 3:
            raise ArithmeticError("j * Delta != c4^3")

    # -- constructors
    @classmethod
    def short(cls, a, b) -> "EllipticCurveQ":
        return cls(0, 0, 0, a, b)

    @classmethod
    def from_list(cls, coeffs: Sequence) -> "EllipticCurveQ":
        coeffs = list(coeffs)
        if len(coeffs) == 2:
            return cls.short(*coeffs)
        if len(coeffs) != 5:
            raise ValueError("need [a, b] or [a1, a2, a3, a4, a6]")
        return cls(*coeffs)

    @property
    def ainvs(self) -> tuple[Fraction, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    # -- invariants
    @property
    def b2(self):
        return self.a1 ** 2 + 4 * self.a2

    @property
    def b4(self):
        return self.a1 * self.a3 + 2 * self.a4

    @property
    def b6(self):
        return self.a3 ** 2 + 4 * self.a6

    @property
    def b8(self):
        a1, a2, a3, a4, a6 = self.ainvs
        return a1 ** 2 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 ** 2 - a4 ** 2

    @property
    def c4(self):
        return self.b2 ** 2 - 24 * self.b4

    @property
    def c6(self):
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 ** 2 * b8 - 8 * b4 ** 3 - 27 * b6 ** 2 + 9 * b2 * b4 * b6

    @property
    def j_invariant(self):
        return self.c4 ** 3 / self.discriminant

    def invariants(self) -> dict[str, Fraction]:
        return {"c4": self.c4, "c6": self.c6, "discriminant": self.discriminant, "j": self.j_invariant}

    def short_model(self) -> tuple[Fraction, Fraction]:
        """(A, B) with y^2 = x^3 + A x + B isomorphic over Q: A = -27 c4, B = -54 c6."""
        return (-27 * self.c4, -54 * self.c6)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.ainvs)

    # -- coordinate changes
    def rst(self, r=0, s=0, t=0, u=1) -> "EllipticCurveQ":
        """Model for x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
        r, s, t, u = _q(r), _q(s), _q(t), _q(u)
        a1, a2, a3, a4, a6 = self.ainvs
        n1 = a1 + 2 * s
        n2 = a2 - s * a1 + 3 * r - s * s
        n3 = a3 + r * a1 + 2 * t
        n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t
        n6 = a6 + r * a4 + r * r * a2 + r ** 3 - t * a3 - t * t - r * t * a1
        return EllipticCurveQ(n1 / u, n2 / u ** 2, n3 / u ** 3, n4 / u ** 4, n6 / u ** 6)

    def integral_model(self) -> "EllipticCurveQ":
        den = 1
        for x in self.ainvs:
            den = lcm(den, x.denominator)
        if den == 1:
            return self
        # u = 1/den scales a_i by den^i
        return self.rst(0, 0, 0, Fraction(1, den))

    def to_json(self) -> dict[str, str]:
        from ..exactalg.serialize import rational_str

        return {k: rational_str(v) for k, v in zip(("a1", "a2", "a3", "a4", "a6"), self.ainvs)}

    @classmethod
    def from_json(cls, d: dict) -> "EllipticCurveQ":
        return cls(*(Fraction(d.get(k, "0")) for k in ("a1", "a2", "a3", "a4", "a6")))

    def __str__(self) -> str:
        from ..exactalg.serialize import rational_str

        return "[" + ",".join(rational_str(x) for x in self.ainvs) + "]"


def curve_invariants(*ainvs) -> dict[str, Fraction]:
    """c4, c6, Delta and j of [a, b] or [a1, a2, a3, a4, a6]."""
    if len(ainvs) == 1:
        ainvs = tuple(ainvs[0])
    return EllipticCurveQ.from_list(ainvs).invariants()


def quadratic_twist(E: EllipticCurveQ, d: int) -> EllipticCurveQ:
    """The twist y^2 = x^3 + A d^2 x + B d^3 of the short model (A, B) of E."""
    from sympy import factorint

    d = int(d)
    if d == 0:
        raise ValueError("d must be nonzero")
    if any(e > 1 for e in factorint(abs(d)).values()):
        raise ValueError(f"{d} is not squarefree")
    A, B = E.short_model()
    T = EllipticCurveQ.short(A * d * d, B * d ** 3)
    tate = E._cache.get("tate")
    if tate is not None:
        T._cache["prime_hint"] = tuple(sorted(set(tate.local) | set(factorint(abs(d))) | {2, 3}))
    return T


def same_j(E: EllipticCurveQ, F: EllipticCurveQ) -> bool:
    return E.j_invariant == F.j_invariant
