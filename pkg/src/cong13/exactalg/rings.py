"""Exact scalar domains: GF(p) and quotient rings K[x]/(m) with K = Q or GF(p)."""
from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Sequence

from . import upoly


class ZeroDivisorError(ArithmeticError):
    """Inversion of a non-unit.  ``factor`` is gcd(element, modulus)."""

    def __init__(self, message: str, factor: list | None = None):
        super().__init__(message)
        self.factor = factor


class GF:
    """Prime field element.  Elements of different primes never mix."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.p = p
        self.v = int(v) % p

    def _o(self, other) -> int:
        if isinstance(other, GF):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other.v
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return int(other)

    def __add__(self, o):
        return GF(self.v + self._o(o), self.p)

    __radd__ = __add__

    def __sub__(self, o):
        return GF(self.v - self._o(o), self.p)

    def __rsub__(self, o):
        return GF(self._o(o) - self.v, self.p)

    def __mul__(self, o):
        return GF(self.v * self._o(o), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return GF(-self.v, self.p)

    def inverse(self) -> "GF":
        if self.v == 0:
            raise ZeroDivisionError("0 in GF(p)")
        return GF(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, o):
        return self * GF(self._o(o), self.p).inverse()

    def __rtruediv__(self, o):
        return GF(self._o(o), self.p) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return GF(pow(self.v, n, self.p), self.p)

    def __eq__(self, o):
        if isinstance(o, GF):
            return self.p == o.p and self.v == o.v
        try:
            return self.v == self._o(o) % self.p
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.p})"

    def sqrt(self) -> "GF | None":
        r = sqrt_mod(self.v, self.p)
        return None if r is None else GF(r, self.p)


def sqrt_mod(a: int, p: int) -> int | None:
    """Tonelli-Shanks; returns None for non-residues."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def roots_mod_p(coeffs: Sequence[int], p: int) -> list[int]:
    """Roots in GF(p) of an integer polynomial (low-first), by exhaustive search for
    small p and gcd with x^p - x otherwise (Cantor-Zassenhaus splitting)."""
    f = upoly.norm(coeffs, p)
    if not f:
        raise ValueError("zero polynomial")
    if p < 5000:
        return [x for x in range(p) if upoly.evaluate(f, x, p) == 0]
    # g = gcd(f, x^p - x)
    xp = _powmod([0, 1], p, f, p)
    g = upoly.gcd(f, upoly.sub(xp, [0, 1], p), p)
    return sorted(_split_roots(g, p))


def _powmod(base, n, mod, p):
    out = [1]
    b = upoly.rem(base, mod, p)
    while n:
        if n & 1:
            out = upoly.rem(upoly.mul(out, b, p), mod, p)
        n >>= 1
        if n:
            b = upoly.rem(upoly.mul(b, b, p), mod, p)
    return out


def _split_roots(g, p, seed: int = 1) -> list[int]:
    d = upoly.deg(g)
    if d <= 0:
        return []
    if d == 1:
        return [(-g[0] * pow(g[1], -1, p)) % p]
    a = seed
    while True:
        h = _powmod([a, 1], (p - 1) // 2, g, p)
        h = upoly.sub(h, [1], p)
        f = upoly.gcd(g, h, p)
        if 0 < upoly.deg(f) < d:
            return _split_roots(f, p, a + 1) + _split_roots(upoly.divmod_(g, f, p)[0], p, a + 1)
        a += 1


class QuotientRing:
    """K[x]/(m(x)) with K = Q (``p is None``) or GF(p).

    Elements are stored as an integer numerator vector of length deg m plus a
    positive integer denominator (always 1 over GF(p)).
    """

    def __init__(self, modulus: Sequence, p: int | None = None, name: str = "x"):
        self.p = p
        self.name = name
        m = upoly.norm(modulus, p)
        if upoly.deg(m) < 1:
            raise ValueError("modulus must have positive degree")
        m = upoly.monic(m, p)
        self.modulus = m
        self.n = len(m) - 1
        if p is None:
            from math import lcm

            den = 1
            for c in m:
                den = lcm(den, c.denominator)
            self._mnum = [int(c * den) for c in m]
            self._mden = den
        else:
            self._mnum = list(m)
            self._mden = 1

    def __eq__(self, other):
        return isinstance(other, QuotientRing) and self.p == other.p and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.p, tuple(self.modulus)))

    def __repr__(self):
        field = "Q" if self.p is None else f"GF({self.p})"
        return f"{field}[{self.name}]/({self.modulus})"

    # -- constructors
    def __call__(self, coeffs) -> "QElem":
        if isinstance(coeffs, QElem):
            return coeffs
        if not isinstance(coeffs, (list, tuple)):
            coeffs = [coeffs]
        return self.from_coeffs(coeffs)

    def from_coeffs(self, coeffs: Sequence) -> "QElem":
        if self.p is not None:
            poly = [int(c) % self.p if not isinstance(c, Fraction)
                    else c.numerator * pow(c.denominator, -1, self.p) % self.p for c in coeffs]
            return QElem(self, self._reduce_int(poly), 1)
        fr = [Fraction(c) for c in coeffs]
        from math import lcm

        den = 1
        for c in fr:
            den = lcm(den, c.denominator)
        num = [int(c * den) for c in fr]
        num, den = self._reduce_rat(num, den)
        return QElem(self, num, den)._normalized()

    def gen(self) -> "QElem":
        return self.from_coeffs([0, 1])

    def one(self) -> "QElem":
        return self.from_coeffs([1])

    def zero(self) -> "QElem":
        return self.from_coeffs([0])

    # -- reduction kernels
    def _reduce_int(self, a: list[int]) -> tuple[int, ...]:
        p, n, m = self.p, self.n, self._mnum
        a = list(a)
        for i in range(len(a) - 1, n - 1, -1):
            c = a[i] % p
            if c:
                for j in range(n):
                    a[i - n + j] -= c * m[j]
            a[i] = 0
        out = [c % p for c in a[:n]]
        out += [0] * (n - len(out))
        return tuple(out)

    def _reduce_rat(self, a: list[int], den: int) -> tuple[tuple[int, ...], int]:
        n, m, md = self.n, self._mnum, self._mden
        a = list(a)
        if md == 1:
            for i in range(len(a) - 1, n - 1, -1):
                c = a[i]
                if c:
                    for j in range(n):
                        a[i - n + j] -= c * m[j]
                a[i] = 0
        else:
            for i in range(len(a) - 1, n - 1, -1):
                c = a[i]
                if c:
                    # multiply everything by md, subtract c * x^(i-n) * mnum
                    a = [x * md for x in a]
                    den *= md
                    for j in range(n + 1):
                        a[i - n + j] -= c * m[j]
                a[i] = 0
        out = a[:n] + [0] * (n - len(a[:n]))
        return tuple(out), den


class QElem:
    __slots__ = ("ring", "num", "den")

    def __init__(self, ring: QuotientRing, num: tuple[int, ...], den: int = 1):
        self.ring = ring
        self.num = num
        self.den = den

    def _normalized(self) -> "QElem":
        if self.ring.p is not None:
            return self
        g = self.den
        for c in self.num:
            if g == 1:
                break
            g = igcd(g, c)
        if g != 1:
            return QElem(self.ring, tuple(c // g for c in self.num), self.den // g)
        return self

    def coeffs(self) -> list:
        if self.ring.p is not None:
            return list(self.num)
        return [Fraction(c, self.den) for c in self.num]

    def _coerce(self, o) -> "QElem":
        if isinstance(o, QElem):
            if o.ring is not self.ring and o.ring != self.ring:
                raise ValueError("mixed quotient rings")
            return o
        if isinstance(o, GF):
            o = o.v
        return self.ring.from_coeffs([o])

    def __add__(self, o):
        o = self._coerce(o)
        r = self.ring
        if r.p is not None:
            return QElem(r, tuple((x + y) % r.p for x, y in zip(self.num, o.num)), 1)
        if self.den == o.den:
            return QElem(r, tuple(x + y for x, y in zip(self.num, o.num)), self.den)._normalized()
        return QElem(r, tuple(x * o.den + y * self.den for x, y in zip(self.num, o.num)),
                     self.den * o.den)._normalized()

    __radd__ = __add__

    def __neg__(self):
        r = self.ring
        if r.p is not None:
            return QElem(r, tuple((-x) % r.p for x in self.num), 1)
        return QElem(r, tuple(-x for x in self.num), self.den)

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        r = self.ring
        if not isinstance(o, QElem):
            if isinstance(o, GF):
                o = o.v
            if isinstance(o, int) and r.p is None:
                return QElem(r, tuple(x * o for x in self.num), self.den)._normalized()
            if isinstance(o, int):
                return QElem(r, tuple(x * o % r.p for x in self.num), 1)
            o = self._coerce(o)
        a, b = self.num, o.num
        n = r.n
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        if r.p is not None:
            return QElem(r, r._reduce_int(prod), 1)
        num, den = r._reduce_rat(prod, self.den * o.den)
        return QElem(r, num, den)._normalized()

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def is_zero(self) -> bool:
        return not any(self.num)

    def __eq__(self, o):
        try:
            o = self._coerce(o)
        except (ValueError, TypeError):
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def inverse(self) -> "QElem":
        inv, _cert = self.inverse_with_certificate()
        return inv

    def inverse_with_certificate(self):
        """Return (inverse, (u, v)) with u*self + v*modulus = 1 in K[x]."""
        r = self.ring
        a = upoly.norm(self.coeffs(), r.p)
        g, u, v = upoly.xgcd(a, r.modulus, r.p)
        if not g or upoly.deg(g) > 0:
            raise ZeroDivisorError("element is not a unit", factor=g)
        return r.from_coeffs(u), (u, v)

    def __truediv__(self, o):
        return self * self._coerce(o).inverse()

    def __rtruediv__(self, o):
        return self._coerce(o) * self.inverse()

    def rational(self):
        """The value as a rational number if it lies in the base field."""
        if any(self.num[1:]):
            raise ValueError("element is not in the base field")
        return self.coeffs()[0]

    def apply_automorphism(self, image_of_x: "QElem") -> "QElem":
        """Apply the K-algebra map x -> image_of_x."""
        acc = self.ring.zero()
        for c in reversed(self.coeffs()):
            acc = acc * image_of_x + c
        return acc

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs()):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*{self.ring.name}^{i}")
        return " + ".join(terms) if terms else "0"


def cyclotomic_ring(n: int = 13, p: int | None = None) -> QuotientRing:
    """Q(zeta_n) (or GF(p)[x]/Phi_n) for prime n."""
    return QuotientRing([1] * n, p=p, name="z")


def gauss_sum(ring: QuotientRing, ell: int = 13) -> QElem:
    """sum_k (k|ell) zeta^k; its square is (-1)^((ell-1)/2) * ell."""
    z = ring.gen()
    acc = ring.zero()
    for k in range(1, ell):
        acc = acc + legendre(k, ell) * z ** k
    return acc


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1
