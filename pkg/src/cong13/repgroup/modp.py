"""Vectorised arithmetic over F_p for primes with 13 | p - 1.

Points are numpy int64 arrays of shape (N, n) with entries in [0, p).  All
products are reduced immediately and 7-term dot products must fit in int64,
so primes stay below 2**30.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from ..exactalg.linalg import is_prime
from ..exactalg.poly import SparsePoly, unpack
from ..exactalg.rings import QElem, roots_mod_p, sqrt_mod

ELL = 13


def to_modp(c, p: int, zeta: int | None = None) -> int:
    """Reduce a rational or a cyclotomic element (zeta -> ``zeta``) modulo p."""
    if isinstance(c, QElem):
        if zeta is None:
            raise ValueError("a cyclotomic coefficient needs an image of zeta")
        acc = 0
        zk = 1
        for a in c.coeffs():
            acc = (acc + to_modp(a, p) * zk) % p
            zk = zk * zeta % p
        return acc
    q = Fraction(c)
    return q.numerator % p * pow(q.denominator % p, -1, p) % p


class PolyModP:
    """A polynomial reduced mod p, prepared for batch evaluation."""

    __slots__ = ("p", "nvars", "exps", "coeffs", "maxdeg")

    def __init__(self, f: SparsePoly, p: int, zeta: int | None = None):
        self.p = p
        self.nvars = f.nvars
        exps, coeffs = [], []
        for k, c in f.terms.items():
            v = to_modp(c, p, zeta)
            if v:
                exps.append(unpack(k, f.nvars))
                coeffs.append(v)
        self.exps = np.array(exps, dtype=np.int64).reshape(-1, f.nvars)
        self.coeffs = np.array(coeffs, dtype=np.int64)
        self.maxdeg = int(self.exps.max()) if len(exps) else 0

    def __call__(self, pts: np.ndarray) -> np.ndarray:
        return eval_many([self], pts)[0]


def power_table(pts: np.ndarray, maxdeg: int, p: int) -> np.ndarray:
    """tab[i, e, :] = pts[:, i] ** e mod p."""
    n_pts, n = pts.shape
    tab = np.ones((n, maxdeg + 1, n_pts), dtype=np.int64)
    base = (pts.T % p).astype(np.int64)
    for e in range(1, maxdeg + 1):
        tab[:, e, :] = tab[:, e - 1, :] * base % p
    return tab


def eval_many(polys: Sequence[PolyModP], pts: np.ndarray, chunk: int = 4096) -> list[np.ndarray]:
    """Evaluate each polynomial at every row of ``pts``."""
    pts = np.atleast_2d(np.asarray(pts, dtype=np.int64))
    if not polys:
        return []
    p = polys[0].p
    maxdeg = max(f.maxdeg for f in polys)
    out = [np.zeros(len(pts), dtype=np.int64) for _ in polys]
    for start in range(0, len(pts), chunk):
        block = pts[start:start + chunk]
        tab = power_table(block, maxdeg, p)
        for idx, f in enumerate(polys):
            if not len(f.coeffs):
                continue
            acc = np.broadcast_to(f.coeffs[:, None], (len(f.coeffs), len(block))).copy()
            for i in range(f.nvars):
                col = f.exps[:, i]
                if col.any():
                    acc = acc * tab[i][col] % p
            out[idx][start:start + chunk] = acc.sum(axis=0) % p
    return out


def interpolate_coeff(values: np.ndarray, nodes: Sequence[int], k: int, p: int) -> np.ndarray:
    """Coefficient of t**k of the polynomial taking ``values[j]`` at ``nodes[j]``.

    ``values`` has shape (len(nodes), ...).
    """
    m = len(nodes)
    V = [[pow(t, e, p) for e in range(m)] for t in nodes]
    inv = _inverse_mod(V, p)
    row = inv[k]
    acc = np.zeros(values.shape[1:], dtype=np.int64)
    for j in range(m):
        if row[j]:
            acc = (acc + values[j] * row[j]) % p
    return acc


def _inverse_mod(M: list[list[int]], p: int) -> list[list[int]]:
    n = len(M)
    A = [[x % p for x in row] + [int(i == j) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next(r for r in range(c, n) if A[r][c])
        A[c], A[piv] = A[piv], A[c]
        inv = pow(A[c][c], -1, p)
        A[c] = [x * inv % p for x in A[c]]
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [(x - f * y) % p for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


@dataclass(frozen=True)
class SpecialField:
    """F_p together with the algebraic numbers used by the special points."""

    p: int
    zeta: int
    omega: int
    alpha: int
    i: int
    beta: int
    sigma_beta: int
    sigma2_beta: int


def _special_field(p: int) -> SpecialField | None:
    if (p - 1) % 156:
        return None
    zeta = next(pow(g, (p - 1) // ELL, p) for g in range(2, p) if pow(g, (p - 1) // ELL, p) != 1)
    omega = roots_mod_p([1, 1, 1], p)[0]
    alpha = sqrt_mod((-1 + 3 * omega) % p, p)
    i = sqrt_mod(p - 1, p)
    if alpha is None or i is None:
        return None
    # beta^3 - (i + 1) beta^2 - beta + i = 0, coefficients listed low degree first
    for beta in roots_mod_p([i % p, p - 1, (-(i + 1)) % p, 1], p):
        s1 = (beta * beta - beta) % p
        s2 = (s1 * s1 - s1) % p
        if (s2 * s2 - s2) % p == beta and len({beta, s1, s2}) == 3:
            return SpecialField(p, zeta, omega, alpha, i, beta, s1, s2)
    return None


@lru_cache(maxsize=None)
def special_fields(count: int = 3, start: int = 1_000_000_007) -> tuple[SpecialField, ...]:
    """The first ``count`` primes above ``start`` where every special point is F_p-rational."""
    out = []
    p = start - (start - 1) % 156
    while len(out) < count:
        p += 156
        if p >= 2 ** 30:
            raise ValueError("ran out of primes below 2**30")
        if is_prime(p):
            f = _special_field(p)
            if f is not None:
                out.append(f)
    return tuple(out)


def random_points(n_pts: int, nvars: int, p: int, seed: int = 0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, p, size=(n_pts, nvars), dtype=np.int64)


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Exact (A @ B) mod p for entries < 2**31 using 16-bit splitting."""
    A = A % p
    B = B % p
    lo = B & 0xFFFF
    hi = B >> 16
    r_lo = _dot_small(A, lo, p)
    r_hi = _dot_small(A, hi, p)
    return (r_hi * (1 << 16) % p + r_lo) % p


def _dot_small(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    # A < 2**31, B < 2**16, so each product < 2**47; sum in chunks of 2**15 terms
    k = A.shape[-1]
    step = 1 << 15
    acc = None
    for s in range(0, k, step):
        part = (A[..., s:s + step] @ B[s:s + step]) % p
        acc = part if acc is None else (acc + part) % p
    return acc
