"""Dense univariate polynomials over Q (Fraction coefficients) or GF(p).

Polynomials are lists of coefficients, lowest degree first, with no
trailing zeros.  ``p=None`` means the rationals.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Sequence


class NotASquare(ValueError):
    """Raised when an exact square root does not exist."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


def trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def norm(a: Sequence, p: int | None = None) -> list:
    if p is None:
        return trim([c if isinstance(c, Fraction) else Fraction(c) for c in a])
    return trim([int(c) % p for c in a])


def deg(a: Sequence) -> int:
    return len(a) - 1


def add(a, b, p=None):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    if p is not None:
        out = [c % p for c in out]
    return trim(out)


def neg(a, p=None):
    return [(-c) % p for c in a] if p is not None else [-c for c in a]


def sub(a, b, p=None):
    return add(a, neg(b, p), p)


def scale(a, c, p=None):
    if p is not None:
        return trim([x * c % p for x in a])
    return trim([x * c for x in a])


def mul(a, b, p=None):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    if p is not None:
        out = [c % p for c in out]
    return trim(out)


def _inv(c, p):
    if p is None:
        return 1 / Fraction(c)
    return pow(int(c), -1, p)


def divmod_(a, b, p=None):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv = _inv(b[-1], p)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        c = c * inv
        if p is not None:
            c %= p
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] -= c * b[j]
            if p is not None:
                a[i - db + j] %= p
    return trim(q), trim(a[:db])


def rem(a, b, p=None):
    return divmod_(a, b, p)[1]


def monic(a, p=None):
    if not a:
        return a
    return scale(a, _inv(a[-1], p), p)


def gcd(a, b, p=None):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a, b, p=None):
    """Return (g, u, v) with u*a + v*b = g monic."""
    r0, r1 = trim(list(a)), trim(list(b))
    s0, s1 = [1 if p else Fraction(1)], []
    t0, t1 = [], [1 if p else Fraction(1)]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], [], []
    inv = _inv(r0[-1], p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def derivative(a, p=None):
    out = [a[i] * i for i in range(1, len(a))]
    if p is not None:
        out = [c % p for c in out]
    return trim(out)


def evaluate(a, x, p=None):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
        if p is not None:
            acc %= p
    return acc


def compose(a, b, p=None):
    acc: list = []
    for c in reversed(a):
        acc = add(mul(acc, b, p), [c], p)
    return acc


def power(a, n, p=None):
    out = [1]
    base = list(a)
    while n:
        if n & 1:
            out = mul(out, base, p)
        n >>= 1
        if n:
            base = mul(base, base, p)
    return out


def squarefree_part(a):
    """a / gcd(a, a') over Q, made monic."""
    g = gcd(a, derivative(a))
    return monic(divmod_(a, g)[0])


def is_squarefree(a, p=None):
    return deg(gcd(a, derivative(a, p), p)) == 0


def _rational_sqrt(c: Fraction) -> Fraction:
    c = Fraction(c)
    if c < 0:
        raise NotASquare(f"{c} is negative")
    n, d = isqrt(c.numerator), isqrt(c.denominator)
    if n * n != c.numerator or d * d != c.denominator:
        raise NotASquare(f"{c} is not a rational square")
    return Fraction(n, d)


def rational_sqrt(c) -> Fraction:
    return _rational_sqrt(Fraction(c))


def poly_sqrt(f: Sequence) -> list:
    """Exact square root over Q with positive leading coefficient.

    The top half of the coefficients is found by back-substitution from the
    leading coefficient; every remaining coefficient is then checked.
    """
    f = norm(f)
    if not f:
        raise NotASquare("zero polynomial")
    n = len(f) - 1
    if n % 2:
        raise NotASquare("odd degree", n)
    m = n // 2
    g = [Fraction(0)] * (m + 1)
    g[m] = _rational_sqrt(f[n])
    if g[m] == 0:
        raise NotASquare("zero leading coefficient", n)
    two_lead = 2 * g[m]
    for k in range(1, m + 1):
        # coefficient of x^(n-k) in g^2 equals f[n-k]
        s = sum(g[m - i] * g[m - k + i] for i in range(1, k))
        g[m - k] = (f[n - k] - s) / two_lead
    sq = mul(g, g)
    for i in range(n + 1):
        fi = f[i] if i < len(f) else 0
        si = sq[i] if i < len(sq) else 0
        if fi != si:
            raise NotASquare(f"coefficient of x^{i} does not match", i)
    return trim(g)


def content_primitive(a) -> tuple[Fraction, list[int]]:
    """Split a rational polynomial into content times a primitive integer polynomial."""
    from math import gcd as igcd, lcm

    a = norm(a)
    if not a:
        return Fraction(0), []
    den = 1
    for c in a:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = igcd(g, c)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), [c // g for c in ints]


def sturm_sequence(a):
    seq = [norm(a), derivative(norm(a))]
    while seq[-1] and deg(seq[-1]) > 0:
        r = rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(neg(r))
    return seq


def _sign_changes(seq, x) -> int:
    signs = []
    for s in seq:
        v = evaluate(s, x)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for u, w in zip(signs, signs[1:]) if u != w)


def _root_bound(a) -> Fraction:
    a = norm(a)
    lead = abs(a[-1])
    return 1 + max(abs(c) for c in a[:-1]) / lead if len(a) > 1 else Fraction(1)


def simplest_rational_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator (then numerator) in [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational_between(-hi, -lo)
    fl = lo.numerator // lo.denominator
    if Fraction(fl) == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    # lo and hi share the integer part fl; recurse on reciprocals of the fractional parts
    inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / inner


def rational_roots(a, max_iterations: int = 400) -> list[Fraction]:
    """All rational roots of a polynomial over Q, found without factoring.

    Real roots are isolated with a Sturm sequence and bisection; in each
    isolating interval the simplest rational is tested exactly.  Roots of
    huge height may be missed only if ``max_iterations`` is exhausted.
    """
    a = norm(a)
    if not a:
        raise ValueError("zero polynomial")
    roots: list[Fraction] = []
    if a[0] == 0:
        roots.append(Fraction(0))
        while a and a[0] == 0:
            a = a[1:]
    if deg(a) <= 0:
        return roots
    sf = squarefree_part(a)
    seq = sturm_sequence(sf)
    bound = _root_bound(sf)
    stack = [(-bound, bound)]
    intervals = []
    while stack:
        lo, hi = stack.pop()
        n = _sign_changes(seq, lo) - _sign_changes(seq, hi)
        if n == 0:
            continue
        if n == 1:
            intervals.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if evaluate(sf, mid) == 0:
            roots.append(mid)
            stack.append((lo, mid - (mid - lo) / 1024))
            stack.append((mid + (hi - mid) / 1024, hi))
            continue
        stack.append((lo, mid))
        stack.append((mid, hi))
    for lo, hi in intervals:
        for _ in range(max_iterations):
            cand = simplest_rational_between(lo, hi)
            if evaluate(sf, cand) == 0:
                roots.append(cand)
                break
            mid = (lo + hi) / 2
            if evaluate(sf, mid) == 0:
                roots.append(mid)
                break
            if _sign_changes(seq, lo) - _sign_changes(seq, mid) == 1:
                hi = mid
            else:
                lo = mid
    return sorted(set(roots))


def resultant(a, b, p=None):
    """Resultant by the Euclidean algorithm (over a field)."""
    a, b = trim(list(a)), trim(list(b))
    if not a or not b:
        return 0
    one = 1 if p is not None else Fraction(1)
    res = one
    while True:
        da, db = deg(a), deg(b)
        if db == 0:
            r = res * b[0] ** da
            return r % p if p is not None else r
        r = rem(a, b, p)
        if not r:
            return 0
        dr = deg(r)
        sign = -1 if (da * db) % 2 else 1
        res = res * sign * b[-1] ** (da - dr)
        if p is not None:
            res %= p
        a, b = b, r
