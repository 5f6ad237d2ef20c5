"""The invariant forms on P^6, the alternating form and the named covariants."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..exactalg.poly import SparsePoly

XVARS = tuple(f"x{i}" for i in range(7))


def _p(text: str, vars=XVARS) -> SparsePoly:
    return SparsePoly.parse(text, vars)


@lru_cache(maxsize=None)
def Q() -> SparsePoly:
    return _p("x0^2 + x1*x4 + x2*x5 + x3*x6")


@lru_cache(maxsize=None)
def F() -> SparsePoly:
    return _p(
        "2*x0^4 + 6*x0*(x1*x3*x5 + x2*x4*x6) + 3*(x1*x2*x4*x5 + x1*x3*x4*x6 + x2*x3*x5*x6)"
        " + x1*x2^3 + x2*x3^3 + x3*x4^3 + x4*x5^3 + x5*x6^3 + x6*x1^3"
    )


def _shift(f: SparsePoly, k: int, sign: int = 1) -> SparsePoly:
    """Cyclically shift subscripts 1..6 by k (x_i -> x_{i+k})."""
    gens = SparsePoly.gens(XVARS)
    images = [gens[0]] + [gens[1 + (i - 1 + k) % 6] for i in range(1, 7)]
    out = f.substitute(images)
    return out if sign == 1 else -out


@lru_cache(maxsize=None)
def cubics_w3() -> tuple[SparsePoly, ...]:
    f0 = _p("-2*x0^3 + x0*(x1*x4 + x2*x5 + x3*x6) + x1*x3*x5 + x2*x4*x6")
    f1 = _p("x0*x1^2 + 2*x0*x3*x4 + 2*x1*x2*x6 + x2*x4^2 + x5*x3^2 + x6*x5^2")
    return (f0,) + tuple(_shift(f1, k) for k in range(6))


@lru_cache(maxsize=None)
def quartics_w4() -> tuple[SparsePoly, ...]:
    g0 = _p("4*x0*(x1*x3*x5 - x2*x4*x6) + x1*x2^3 - x2*x3^3 + x3*x4^3 - x4*x5^3 + x5*x6^3 - x6*x1^3")
    g1 = _p(
        "4*x0^2*x1^2 - 4*x0^2*x3*x4 + 4*x0*x1*x2*x6 - 2*x0*x3^2*x5 - 2*x0*x5^2*x6 - x1^3*x4"
        " + x1^2*x2*x5 - 2*x1*x3*x4^2 - x1*x5^3 - x2^3*x3 - 2*x2^2*x6^2 + 4*x2*x3*x4*x5"
        " + x3^2*x4*x6 + x4*x5*x6^2"
    )
    return (g0,) + tuple(_shift(g1, k, (-1) ** k) for k in range(6))


# Alternating 3-form as {(i, j, k): coefficient} with i < j < k
PHI_X13 = {(0, 1, 4): 1, (0, 2, 5): -1, (0, 3, 6): 1, (1, 3, 5): 1, (2, 4, 6): -1}


def n_matrix(phi: dict[tuple[int, int, int], object], vars: Sequence[str]) -> list[list[SparsePoly]]:
    """N_ij = (d/dx_i wedge d/dx_j) Phi as a matrix of linear forms."""
    n = len(vars)
    gens = SparsePoly.gens(vars)
    N = [[SparsePoly(vars) for _ in range(n)] for _ in range(n)]
    from itertools import permutations

    for (i, j, k), c in phi.items():
        base = (i, j, k)
        for perm in permutations(range(3)):
            a, b, d = (base[perm[0]], base[perm[1]], base[perm[2]])
            sign = _perm_sign(perm)
            N[a][b] = N[a][b] + gens[d] * (c * sign)
    return N


def _perm_sign(perm) -> int:
    s = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


@lru_cache(maxsize=None)
def N_x13() -> tuple[tuple[SparsePoly, ...], ...]:
    return tuple(tuple(r) for r in n_matrix(PHI_X13, XVARS))


N_PUBLISHED = [
    "0 x4 -x5 x6 -x1 x2 -x3",
    "-x4 0 0 x5 x0 -x3 0",
    "x5 0 0 0 -x6 -x0 x4",
    "-x6 -x5 0 0 0 x1 x0",
    "x1 -x0 x6 0 0 0 -x2",
    "-x2 x3 x0 -x1 0 0 0",
    "x3 0 -x4 -x0 x2 0 0",
]


def published_N() -> list[list[SparsePoly]]:
    return [[_p(e) for e in row.split()] for row in N_PUBLISHED]


# ---------------------------------------------------------------- quadric helpers


def constant_matrix(H: Sequence[Sequence[SparsePoly]]) -> list[list[Fraction]]:
    out = []
    for row in H:
        r = []
        for e in row:
            if e.degree() > 0:
                raise ValueError("Hessian of a quadric must be constant")
            r.append(Fraction(e.terms.get(0, 0)))
        out.append(r)
    return out


def invert(M: Sequence[Sequence]) -> list[list]:
    """Gauss-Jordan inverse over a field (entries Fraction or ring elements)."""
    n = len(M)
    A = [list(M[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def hessian_inverse(q: SparsePoly) -> list[list[Fraction]]:
    return invert(constant_matrix(q.hessian()))


def grad_q(q: SparsePoly, f: SparsePoly, hinv=None) -> list[SparsePoly]:
    """nabla_Q f = H(Q)^{-1} grad f."""
    hinv = hinv or hessian_inverse(q)
    g = f.gradient()
    out = []
    for row in hinv:
        acc = SparsePoly(f.vars)
        for c, gi in zip(row, g):
            if c:
                acc = acc + gi * c
        out.append(acc)
    return out


def mat_vec(M: Sequence[Sequence], v: Sequence):
    out = []
    for row in M:
        acc = None
        for c, x in zip(row, v):
            if isinstance(c, SparsePoly) or c != 0:
                t = c * x if isinstance(c, SparsePoly) else x * c
                acc = t if acc is None else acc + t
        out.append(acc if acc is not None else 0 * v[0])
    return out


def dot_q(hq: Sequence[Sequence[Fraction]], v: Sequence, w: Sequence):
    """v^T H(Q) w."""
    hw = mat_vec(hq, w)
    acc = None
    for a, b in zip(v, hw):
        t = a * b
        acc = t if acc is None else acc + t
    return acc


def hessian_bracket(f: SparsePoly, g: SparsePoly, q: SparsePoly) -> SparsePoly:
    """trace(H(f) H(q)^{-1} H(g) H(q)^{-1})."""
    hinv = hessian_inverse(q)
    Hf, Hg = f.hessian(), g.hessian()
    n = f.nvars
    A = [[_lin(Hf[i], hinv, j) for j in range(n)] for i in range(n)]  # Hf * hinv
    B = [[_lin(Hg[i], hinv, j) for j in range(n)] for i in range(n)]  # Hg * hinv
    acc = SparsePoly(f.vars)
    for i in range(n):
        for k in range(n):
            if A[i][k] and B[k][i]:
                acc = acc + A[i][k] * B[k][i]
    return acc


def _lin(row: Sequence[SparsePoly], hinv, j: int) -> SparsePoly:
    acc = SparsePoly(row[0].vars)
    for k, e in enumerate(row):
        c = hinv[k][j]
        if c and e:
            acc = acc + e * c
    return acc


def compose_vec(v: Sequence[SparsePoly], w: Sequence[SparsePoly]) -> list[SparsePoly]:
    """(v o w)(x) = v(w(x))."""
    return [vi.substitute(list(w)) for vi in v]


def directional_coeff(w: Sequence[SparsePoly], v: Sequence[SparsePoly], k: int) -> list[SparsePoly]:
    """coeff(w o (x + t v), t^k) = sum over |alpha| = k of d^alpha w * v^alpha / alpha!."""
    from math import factorial

    from ..exactalg.poly import monomials

    n = len(v)
    out = []
    for f in w:
        acc = SparsePoly(f.vars)
        for alpha in monomials(n, k):
            d = f
            for i, e in enumerate(alpha):
                for _ in range(e):
                    d = d.diff(i)
                    if not d:
                        break
                if not d:
                    break
            if not d:
                continue
            term = d
            den = 1
            for i, e in enumerate(alpha):
                if e:
                    term = term * (v[i] ** e)
                    den *= factorial(e)
            acc = acc + term * Fraction(1, den)
        out.append(acc)
    return out
