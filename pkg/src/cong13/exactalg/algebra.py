"""Quotient algebras of Q[t] and of Q[s, t].

``BivariateQuotient`` handles ideals (g1(s,t), g2(s,t)) whose zero set is
finite: the resultant in s gives R(t); factors shared with a supplied
degeneracy polynomial are stripped; s is then expressed as an element of
Q[t]/(R1) by a Euclidean remainder sequence in s.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import upoly
from .linalg import determinant
from .poly import SparsePoly, unpack
from .rings import QElem, QuotientRing, ZeroDivisorError


def poly_to_upoly(f: SparsePoly, var: str | int = 0) -> list[Fraction]:
    """Dense coefficient list of a polynomial in a single variable."""
    i = var if isinstance(var, int) else f.vars.index(var)
    n = f.nvars
    out: list = []
    for k, c in f.terms.items():
        e = unpack(k, n)
        if any(x for j, x in enumerate(e) if j != i):
            raise ValueError("polynomial involves other variables")
        d = e[i]
        if d >= len(out):
            out += [0] * (d + 1 - len(out))
        out[d] += c
    return upoly.norm(out)


def upoly_to_poly(coeffs: Sequence, vars: Sequence[str] = ("t",), var: int = 0) -> SparsePoly:
    exps = {}
    for d, c in enumerate(coeffs):
        if c:
            e = [0] * len(vars)
            e[var] = d
            exps[tuple(e)] = c
    return SparsePoly.from_dict(vars, exps)


def _coeffs_in(f: SparsePoly, var: str) -> list[SparsePoly]:
    """Write f = sum_k c_k(other vars) * var^k."""
    i = f.vars.index(var)
    d = f.degree_in(i)
    return [f.coefficient_in(i, k) for k in range(d + 1)]


class UnivariateQuotient:
    """Q[t]/(m) as a QuotientAlgebra."""

    def __init__(self, modulus: Sequence, var: str = "t", p: int | None = None):
        self.var = var
        self.ring = QuotientRing(modulus, p=p, name=var)

    def reduce(self, f: SparsePoly) -> QElem:
        coeffs = poly_to_upoly(f, self.var) if isinstance(f, SparsePoly) else list(f)
        return self.ring.from_coeffs(coeffs)

    def reduce_poly(self, f: SparsePoly) -> SparsePoly:
        return upoly_to_poly(self.reduce(f).coeffs(), f.vars, f.vars.index(self.var))


class BivariateQuotient:
    """Q[s,t]/(g1, g2) realized as Q[t]/(R1) with s replaced by a representative."""

    def __init__(self, g1: SparsePoly, g2: SparsePoly, s: str = "s", t: str = "t",
                 degenerate: SparsePoly | None = None, p: int | None = None):
        if g1.vars != g2.vars:
            raise ValueError("generators must share variables")
        self.s, self.t = s, t
        self.p = p
        tv = (t,)
        c1 = [_to_t(c, t) for c in _coeffs_in(g1, s)]
        c2 = [_to_t(c, t) for c in _coeffs_in(g2, s)]
        R = poly_to_upoly(_sylvester_resultant(c1, c2, tv), t)
        self.resultant = R
        R1 = list(R)
        if degenerate is not None:
            dpoly = poly_to_upoly(_to_t(degenerate, t), t)
            while True:
                g = upoly.gcd(R1, dpoly)
                if upoly.deg(g) <= 0:
                    break
                R1 = upoly.divmod_(R1, g)[0]
        self.R1 = upoly.monic(R1)
        self.ring = QuotientRing(self.R1 if p is None else [c for c in self.R1], p=p, name=t)
        self.s_rep = self._solve_s(c1, c2)

    def _solve_s(self, c1, c2) -> QElem:
        r = self.ring
        a = [r.from_coeffs(poly_to_upoly(c, self.t)) for c in c1]
        b = [r.from_coeffs(poly_to_upoly(c, self.t)) for c in c2]
        a, b = _trim_q(a), _trim_q(b)
        while len(b) > 2 or (len(b) == 2 and len(a) > 2):
            if len(a) < len(b):
                a, b = b, a
            a = _rem_q(a, b)
            a, b = b, a
        lin = b if len(b) == 2 else a
        if len(lin) != 2:
            raise ZeroDivisorError("remainder sequence did not reach a linear polynomial in s")
        return -lin[0] * lin[1].inverse()

    def reduce(self, f: SparsePoly) -> QElem:
        """Normal form of f(s,t) as an element of Q[t]/(R1)."""
        r = self.ring
        acc = r.zero()
        spow = [r.one()]
        for k, ck in enumerate(_coeffs_in(f, self.s)):
            while len(spow) <= k:
                spow.append(spow[-1] * self.s_rep)
            if ck:
                acc = acc + r.from_coeffs(poly_to_upoly(_to_t(ck, self.t), self.t)) * spow[k]
        return acc

    def reduce_poly(self, f: SparsePoly) -> SparsePoly:
        return upoly_to_poly(self.reduce(f).coeffs(), (self.t,))


def _trim_q(a: list[QElem]) -> list[QElem]:
    while a and a[-1].is_zero():
        a.pop()
    return a


def _rem_q(a: list[QElem], b: list[QElem]) -> list[QElem]:
    a = list(a)
    inv = b[-1].inverse()
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv
        if c.is_zero():
            continue
        for j in range(db + 1):
            a[i - db + j] = a[i - db + j] - c * b[j]
    return _trim_q(a[:db])


def _to_t(f: SparsePoly, t: str) -> SparsePoly:
    """Drop every variable except t (they must not occur)."""
    i = f.vars.index(t)
    out = {}
    n = f.nvars
    for k, c in f.terms.items():
        e = unpack(k, n)
        if any(x for j, x in enumerate(e) if j != i):
            raise ValueError("coefficient involves variables other than t")
        out[(e[i],)] = c
    return SparsePoly.from_dict((t,), out)


def _sylvester_resultant(c1: list[SparsePoly], c2: list[SparsePoly], tv) -> SparsePoly:
    m, n = len(c1) - 1, len(c2) - 1
    size = m + n
    zero = SparsePoly(tv)
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(c1)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(c2)):
            row[i + j] = c
        rows.append(row)
    return determinant(rows)
