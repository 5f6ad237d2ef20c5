"""Invariants and (skew) bi-invariants of G by Borel averaging.

Let B = <M6, M13>.  Every element of G outside B lies in the double coset
B M2 B, and each element of that coset has exactly |B ∩ M2 B M2^{-1}| = 6
factorisations, so for a B-invariant f the Reynolds operator is

    R(f) = (f + 13 R_B(f o M2)) / 14,

and f is G-invariant exactly when pi(f o M2) = f, where pi averages over
the powers of M13.  A basis of B-invariants is given by the M6-orbit sums of
M13-fixed monomials, which have rational coefficients.

Dimensions are computed over F_p (13 | p - 1) by evaluating pi(f o M2) - f
at random points.  Rational bases are lifted from several primes by CRT and
rational reconstruction, then certified by an exact check of M2-invariance
over Z[zeta] using symmetric-power matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence

import numpy as np

from ..exactalg.linalg import is_prime, lift_modular, nullspace_mod_p, rank_mod_p, rref_mod_p
from ..exactalg.poly import SparsePoly, monomials, pack
from . import cyclo
from .cyclo import ELL, GAUSS, M13_WEIGHTS, cyclo_mul, m2_raw, reduce_cyclic
from .modp import PolyModP, eval_many, random_points

PLAIN = "plain"
SKEW = "skew"
DEFAULT_CAP = 6

XV = tuple(f"x{i}" for i in range(7))
YV = tuple(f"y{i}" for i in range(7))
XYV = XV + YV


class CapExceeded(ValueError):
    pass


# ------------------------------------------------------------------ B-invariants


def _m6_image(exp: tuple[int, ...]) -> tuple[int, ...]:
    """Exponent of (x^exp) o M6 up to sign, for one block of 7 variables."""
    out = [0] * 7
    out[0] = exp[0]
    out[6] = exp[1]
    for i in range(2, 7):
        out[i - 1] = exp[i]
    return tuple(out)


def _blocks(m: int, n: int) -> list[tuple[int, ...]]:
    """Exponent vectors of bidegree (m, n) in x0..x6, y0..y6."""
    xs = monomials(7, m)
    if n is None:
        return xs
    ys = monomials(7, n)
    return [a + b for a in xs for b in ys]


def _weight(exp: tuple[int, ...], ymult: int) -> int:
    w = sum(e * M13_WEIGHTS[i] for i, e in enumerate(exp[:7]))
    if len(exp) > 7:
        w += ymult * sum(e * M13_WEIGHTS[i] for i, e in enumerate(exp[7:]))
    return w % ELL


@dataclass(frozen=True)
class InvariantProblem:
    """The space of (bi-)forms of a given (bi)degree and the action on it."""

    m: int
    n: int | None  # None means forms in x only
    kind: str

    @property
    def vars(self) -> tuple[str, ...]:
        return XV if self.n is None else XYV

    @property
    def ymult(self) -> int:
        return 2 if self.kind == SKEW else 1

    @property
    def degree(self) -> int:
        return self.m + (self.n or 0)


@lru_cache(maxsize=None)
def m13_fixed_monomials(prob: InvariantProblem) -> tuple[tuple[int, ...], ...]:
    return tuple(e for e in _blocks(prob.m, prob.n) if _weight(e, prob.ymult) == 0)


@lru_cache(maxsize=None)
def borel_basis(prob: InvariantProblem) -> tuple[SparsePoly, ...]:
    """M6-orbit sums of M13-fixed monomials (a rational basis of the B-invariants)."""
    sign = -1 if prob.degree % 2 else 1
    seen: set = set()
    out = []
    for e in m13_fixed_monomials(prob):
        if e in seen:
            continue
        terms: dict[int, int] = {}
        cur, s = e, 1
        orbit = []
        for _ in range(6):
            orbit.append(cur)
            k = pack(cur)
            terms[k] = terms.get(k, 0) + s
            if prob.n is None:
                cur = _m6_image(cur)
            else:
                cur = _m6_image(cur[:7]) + _m6_image(cur[7:])
            s *= sign
        seen.update(orbit)
        terms = {k: v for k, v in terms.items() if v}
        if terms:
            out.append(SparsePoly(prob.vars, terms))
    return tuple(out)


# ------------------------------------------------------------------ mod p


def primes_1_mod_13(count: int, below: int = 2 ** 30, skip: int = 0) -> list[int]:
    out = []
    p = below - ((below - 1) % 26)
    while len(out) < count + skip:
        if is_prime(p):
            out.append(p)
        p -= 26
    return out[skip:]


def zeta_mod(p: int) -> int:
    for g in range(2, p):
        z = pow(g, (p - 1) // ELL, p)
        if z != 1:
            return z
    raise ValueError("no 13th root of unity")


def _block_matrices(prob: InvariantProblem, p: int, zeta: int) -> tuple[np.ndarray, list[np.ndarray]]:
    m2 = cyclo.m2().mod_p(p, zeta)
    m13 = cyclo.m13().mod_p(p, zeta)
    if prob.n is None:
        return m2, [_pow_mod(m13, i, p) for i in range(ELL)]
    tw = cyclo.tilde if prob.kind == SKEW else (lambda g: g)
    m2y = tw(cyclo.m2()).mod_p(p, zeta)
    m13y = tw(cyclo.m13()).mod_p(p, zeta)
    big2 = _diag_blocks(m2, m2y)
    big13 = _diag_blocks(m13, m13y)
    return big2, [_pow_mod(big13, i, p) for i in range(ELL)]


def _diag_blocks(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros((14, 14), dtype=np.int64)
    out[:7, :7] = a
    out[7:, 7:] = b
    return out


def _pow_mod(a: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.eye(a.shape[0], dtype=np.int64)
    for _ in range(e):
        out = _mm(out, a, p)
    return out


def _mm(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = (out + np.outer(a[:, k], b[k, :]) % p) % p
    return out


def condition_matrix(prob: InvariantProblem, p: int, seed: int = 0, extra: int = 24) -> np.ndarray:
    """Rows: random points X; columns: basis elements b; entry b(X) - pi(b o M2)(X)."""
    basis = borel_basis(prob)
    zeta = zeta_mod(p)
    big2, m13_powers = _block_matrices(prob, p, zeta)
    npts = len(m13_fixed_monomials(prob)) + extra
    nv = len(prob.vars)
    X = random_points(npts, nv, p, seed)
    polys = [PolyModP(b, p) for b in basis]
    direct = np.stack(eval_many(polys, X), axis=1)
    avg = np.zeros_like(direct)
    for g in m13_powers:
        M = _mm(big2, g, p)
        Y = _apply(M, X, p)
        avg = (avg + np.stack(eval_many(polys, Y), axis=1)) % p
    inv13 = pow(ELL, -1, p)
    return (direct - avg * inv13) % p


def _apply(M: np.ndarray, X: np.ndarray, p: int) -> np.ndarray:
    out = np.zeros_like(X)
    for j in range(M.shape[1]):
        out = (out + np.outer(X[:, j], M[:, j]) % p) % p
    return out


def dimension_mod_p(prob: InvariantProblem, p: int, seed: int = 0) -> int:
    A = condition_matrix(prob, p, seed)
    return A.shape[1] - rank_mod_p(A, p)


def invariant_dimension(m: int, n: int | None = None, kind: str = PLAIN, primes: int = 2) -> int:
    """Dimension of the space of (skew) (bi-)invariants; agreement over several primes required."""
    prob = InvariantProblem(m, n, kind)
    if not borel_basis(prob):
        return 0
    dims = {dimension_mod_p(prob, p, seed=i) for i, p in enumerate(primes_1_mod_13(primes))}
    if len(dims) != 1:
        # an unlucky prime or sample can only raise the kernel; the minimum is the answer
        return min(dims)
    return dims.pop()


# ------------------------------------------------------------------ exact Z[zeta] check


@lru_cache(maxsize=None)
def _monomial_index(d: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(monomials(7, d))}


@lru_cache(maxsize=None)
def _sym_power_cached(d: int, skew: bool) -> np.ndarray:
    A = m2_raw()
    if skew:
        A = cyclo.CycloMatrix(A).galois(2).arr
    return sym_power(A, d)


def sym_power(A: np.ndarray, d: int) -> np.ndarray:
    """S[alpha, gamma] = coefficient of x^gamma in prod_i (A x)_i^alpha_i, over Z[zeta]."""
    if d == 0:
        out = np.zeros((1, 1, ELL - 1), dtype=np.int64)
        out[0, 0, 0] = 1
        return out
    prev = sym_power(A, d - 1)
    mons = monomials(7, d)
    prev_idx = _monomial_index(d - 1)
    idx = _monomial_index(d)
    first = [next(i for i, e in enumerate(a) if e) for a in mons]
    parent = [prev_idx[tuple(e - (k == i) for k, e in enumerate(a))] for a, i in zip(mons, first)]
    P = prev[parent]  # (M_d, M_{d-1}, 12)
    out = np.zeros((len(mons), len(mons), ELL - 1), dtype=np.int64)
    lower = monomials(7, d - 1)
    for j in range(7):
        shift = [idx[tuple(e + (k == j) for k, e in enumerate(b))] for b in lower]
        coef = A[first, j]  # (M_d, 12)
        if not coef.any():
            continue
        prod = cyclo_mul(P, coef[:, None, :])
        out[:, shift, :] += prod
    return out


def _coeff_matrix(f: SparsePoly, m: int, n: int) -> tuple[np.ndarray, int]:
    """Integer matrix C[alpha, beta] with f = (1/den) sum C x^alpha y^beta."""
    ix, iy = _monomial_index(m), _monomial_index(n)
    den = 1
    for _, c in f.items():
        den = lcm(den, Fraction(c).denominator)
    C = np.zeros((len(ix), len(iy)), dtype=object)
    for exp, c in f.items():
        C[ix[exp[:7]], iy[exp[7:]]] = int(Fraction(c) * den)
    return C, den


def exact_m2_invariant(f: SparsePoly, prob: InvariantProblem) -> bool:
    """Exact check that f o (M2, M2 or its twist) = f, computed over Z[zeta]."""
    m, n = prob.m, (prob.n or 0)
    if prob.n is None:
        f = f.embed(XYV) if f.vars != XYV else f
    C, _ = _coeff_matrix(f, m, n)
    Sm = _sym_power_cached(m, False)
    Sn = _sym_power_cached(n, prob.kind == SKEW)
    cmax = max((abs(int(x)) for x in C.flat), default=0)
    bound = cmax * int(np.abs(Sm).sum()) * int(np.abs(Sn).sum()) * ELL ** 2
    dtype = np.int64 if bound < 2 ** 62 else object
    C = C.astype(dtype)
    Sm = Sm.astype(dtype)
    Sn = Sn.astype(dtype)
    R = np.zeros((Sm.shape[1], Sn.shape[1], 2 * ELL - 3), dtype=dtype)
    U = [C.dot(Sn[:, :, l]) for l in range(ELL - 1)]
    for k in range(ELL - 1):
        SkT = Sm[:, :, k].T
        if not SkT.any():
            continue
        for l in range(ELL - 1):
            R[:, :, k + l] += SkT.dot(U[l])
    R = _reduce_obj(R.astype(object))
    C = C.astype(object)
    total = m + n
    h, e = divmod(total, 2)
    if e:
        R = _reduce_obj(_conv_obj(R, GAUSS.astype(object)))
    if prob.kind == SKEW and n % 2:
        R = -R
    target = np.zeros_like(R)
    target[:, :, 0] = C * (ELL ** (total - h))
    return bool((R == target).all())


def _conv_obj(a: np.ndarray, g: np.ndarray) -> np.ndarray:
    out = np.zeros(a.shape[:-1] + (a.shape[-1] + len(g) - 1,), dtype=object)
    for k in range(len(g)):
        if g[k]:
            out[..., k:k + a.shape[-1]] += a * int(g[k])
    return out


def _reduce_obj(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    out = np.zeros(a.shape[:-1] + (ELL,), dtype=object)
    for k in range(n):
        out[..., k % ELL] += a[..., k]
    top = out[..., ELL - 1].copy()
    return out[..., : ELL - 1] - top[..., None]


# ------------------------------------------------------------------ rational bases


@dataclass(frozen=True)
class InvariantSpace:
    m: int
    n: int | None
    kind: str
    basis: tuple[SparsePoly, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


@lru_cache(maxsize=None)
def reynolds_space(m: int, n: int | None = None, kind: str = PLAIN, cap: int = DEFAULT_CAP,
                   certify: bool = True) -> InvariantSpace:
    """A rational basis (echelon form in the Borel basis) of the (skew) (bi-)invariants."""
    if m > cap or (n or 0) > cap:
        raise CapExceeded(f"degree ({m},{n}) exceeds the cap {cap}")
    prob = InvariantProblem(m, n, kind)
    basis = borel_basis(prob)
    if not basis:
        return InvariantSpace(m, n, kind, ())
    r = len(basis)
    primes = iter(primes_1_mod_13(60))

    def compute(p):
        A = condition_matrix(prob, p, seed=p % 1000)
        K = nullspace_mod_p(A, p)
        if len(K):
            K, piv = rref_mod_p(K, p)
        else:
            piv = []
        return (len(K), tuple(piv)), [int(x) for x in K.flatten()]

    def verify(sig, rec):
        vecs = [rec[i * r:(i + 1) * r] for i in range(sig[0])]
        forms = [_combine(basis, v, prob.vars) for v in vecs]
        return all(exact_m2_invariant(f, prob) for f in forms) if certify else True

    sig, rec = lift_modular(compute, fingerprint_key=lambda s: -s[0], verify=verify,
                            primes=primes, max_primes=50)
    vecs = [rec[i * r:(i + 1) * r] for i in range(sig[0])]
    forms = tuple(_primitive(_combine(basis, v, prob.vars)) for v in vecs)
    return InvariantSpace(m, n, kind, forms)


def _combine(basis: Sequence[SparsePoly], coeffs: Sequence[Fraction], vars) -> SparsePoly:
    acc = SparsePoly(vars)
    for b, c in zip(basis, coeffs):
        if c:
            acc = acc + b * c
    return acc


def _primitive(f: SparsePoly) -> SparsePoly:
    """Scale to integer coefficients with content 1 and positive leading coefficient."""
    den, num = 1, 0
    for _, c in f.items():
        den = lcm(den, Fraction(c).denominator)
    for _, c in f.items():
        num = gcd(num, int(Fraction(c) * den))
    lead = next(iter(f.items()), None)
    if lead is None:
        return f
    scale = Fraction(den, num)
    if Fraction(lead[1]) < 0:
        scale = -scale
    return f * scale


def coordinates(forms: Sequence[SparsePoly], monomial_list: Sequence[tuple[int, ...]]) -> list[list[Fraction]]:
    """Matrix of coefficients of the given monomials in each form."""
    return [[Fraction(f.coeff(e)) for e in monomial_list] for f in forms]
