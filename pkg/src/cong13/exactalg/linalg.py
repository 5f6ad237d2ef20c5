"""Exact linear algebra.

* ``nullspace_basis`` returns the canonical reduced-echelon kernel basis:
  one vector per free column, with a 1 in that column and 0 in the other
  free columns.  Over Q it runs fraction-free (Bareiss) elimination; for
  large rational systems it switches to a multi-modular computation whose
  output is certified exactly (see ``nullspace_modular``).
* ``rref_mod_p`` / ``nullspace_mod_p`` work on numpy int64 arrays.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

import numpy as np

from .rings import GF, QElem

# primes just below 2**31: products of two residues fit in int64
_PRIMES: list[int] = []


def large_primes(count: int, start: int = 2**31 - 1, congruent: tuple[int, int] | None = None) -> list[int]:
    """Primes below ``start`` (descending), optionally with p = r mod m."""
    out = []
    n = start
    while len(out) < count:
        if congruent is None or n % congruent[0] == congruent[1]:
            if _is_prime(n):
                out.append(n)
        n -= 1
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    return _is_prime(n)


def _modulus_primes(count: int) -> list[int]:
    while len(_PRIMES) < count:
        start = _PRIMES[-1] - 1 if _PRIMES else 2**31 - 1
        _PRIMES.extend(large_primes(1, start))
    return _PRIMES[:count]


# ---------------------------------------------------------------------- helpers


def kernel_from_rref(rref: Sequence[Sequence], pivots: Sequence[int], ncols: int, one=1, zero=0) -> list[list]:
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -rref[i][f]
        basis.append(v)
    return basis


def _domain_of(rows: Sequence[Sequence]):
    for row in rows:
        for x in row:
            if isinstance(x, QElem):
                return ("quotient", x.ring)
            if isinstance(x, GF):
                return ("gf", x.p)
    return ("rational", None)


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
            elif not isinstance(x, int):
                raise TypeError(f"unsupported entry type {type(x).__name__}")
        ints = [int(x * den) if den != 1 else int(x) for x in row]
        g = 0
        for x in ints:
            g = gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
        out.append(ints)
    return out


# ---------------------------------------------------------------------- rational (Bareiss)


def bareiss_rref(rows: Sequence[Sequence[int]]) -> tuple[list[list[Fraction]], list[int]]:
    """Fraction-free elimination of an integer matrix, then exact normalization."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    prev = 1
    k = 0
    for c in range(ncols):
        if k >= nrows:
            break
        piv = None
        best = None
        for r in range(k, nrows):
            v = m[r][c]
            if v:
                size = abs(v)
                if best is None or size < best:
                    piv, best = r, size
                    if size == 1:
                        break
        if piv is None:
            continue
        m[k], m[piv] = m[piv], m[k]
        pk = m[k]
        a = pk[c]
        for r in range(k + 1, nrows):
            row = m[r]
            b = row[c]
            if b == 0:
                if prev != 1 or a != 1:
                    m[r] = [(a * x) // prev for x in row]
                continue
            m[r] = [(a * x - b * y) // prev for x, y in zip(row, pk)]
        prev = a
        pivots.append(c)
        k += 1
    rank = len(pivots)
    ech = m[:rank]
    # back substitution with fractions on the (small) echelon part
    red = [[Fraction(x) for x in row] for row in ech]
    for i in range(rank - 1, -1, -1):
        c = pivots[i]
        inv = 1 / red[i][c]
        red[i] = [x * inv for x in red[i]]
        for j in range(i):
            f = red[j][c]
            if f:
                red[j] = [x - f * y for x, y in zip(red[j], red[i])]
    return red, pivots


def rank_rational(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(bareiss_rref(_integer_rows(rows))[1])


# ---------------------------------------------------------------------- generic field (quotient rings, GF)


def gauss_jordan(rows: Sequence[Sequence], one, zero) -> tuple[list[list], list[int]]:
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    k = 0
    for c in range(ncols):
        if k >= nrows:
            break
        piv = next((r for r in range(k, nrows) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[k], m[piv] = m[piv], m[k]
        inv = one / m[k][c]
        m[k] = [x * inv for x in m[k]]
        for r in range(nrows):
            if r != k and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[k])]
        pivots.append(c)
        k += 1
    return m[:k], pivots


# ---------------------------------------------------------------------- mod p with numpy


def rref_mod_p(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of an int64 matrix modulo p < 2**31."""
    A = np.array(a, dtype=np.int64) % p
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            A[nzr] = (A[nzr] - (col[nzr, None] * A[r][None, :]) % p) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def nullspace_mod_p(a: np.ndarray, p: int) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, piv = rref_mod_p(a, p)
    free = [c for c in range(ncols) if c not in set(piv)]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for j, f in enumerate(free):
        out[j, f] = 1
        for i, pc in enumerate(piv):
            out[j, pc] = (-R[i, f]) % p
    return out


def rank_mod_p(a: np.ndarray, p: int) -> int:
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    return len(rref_mod_p(a, p)[1])


def reduce_mod_p(x, p: int) -> int:
    if isinstance(x, Fraction):
        return x.numerator * pow(x.denominator, -1, p) % p
    return int(x) % p


def matrix_mod_p(rows: Sequence[Sequence], p: int) -> np.ndarray:
    return np.array([[reduce_mod_p(x, p) for x in row] for row in rows], dtype=np.int64).reshape(
        len(rows), len(rows[0]) if rows else 0)


# ---------------------------------------------------------------------- rational reconstruction


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    t = ((r2 - r1) * pow(m1, -1, m2)) % m2
    return r1 + m1 * t, m1 * m2


def rational_reconstruct(a: int, m: int) -> Fraction | None:
    """Wang's algorithm: find n/d = a mod m with |n|, d <= sqrt(m/2)."""
    a %= m
    bound = isqrt(m // 2)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


class ModularLifter:
    """Accumulates residue vectors over primes and reconstructs rationals."""

    def __init__(self):
        self.residues: np.ndarray | None = None
        self.values: list[int] | None = None
        self.modulus = 1
        self.primes: list[int] = []

    def add(self, vec: Sequence[int], p: int) -> None:
        vec = [int(v) for v in vec]
        if self.values is None:
            self.values = [v % p for v in vec]
            self.modulus = p
        else:
            m = self.modulus
            inv = pow(m, -1, p)
            self.values = [r + m * (((v - r) * inv) % p) for r, v in zip(self.values, vec)]
            self.modulus = m * p
        self.primes.append(p)

    def reconstruct(self) -> list[Fraction] | None:
        if self.values is None:
            return None
        out = []
        cache: dict[int, Fraction] = {}
        for v in self.values:
            q = cache.get(v)
            if q is None:
                q = rational_reconstruct(v, self.modulus)
                if q is None:
                    return None
                cache[v] = q
            out.append(q)
        return out


def lift_modular(compute, fingerprint_key=None, min_primes: int = 2, max_primes: int = 400,
                 verify=None, primes: Iterable[int] | None = None):
    """Generic multi-modular driver.

    ``compute(p)`` returns ``(signature, flat_vector)`` for prime ``p`` or
    ``None`` if p is unlucky.  Results whose signature differs from the
    dominant one are discarded.  Reconstruction stops when the rational
    vector is unchanged after adding a prime and ``verify`` (if given)
    accepts it.
    """
    sig_best = None
    lifter = ModularLifter()
    last = None
    prime_iter = iter(primes) if primes is not None else None
    count = 0
    idx = 0
    while count < max_primes:
        if prime_iter is not None:
            p = next(prime_iter)
        else:
            idx += 1
            p = _modulus_primes(idx)[-1]
        res = compute(p)
        if res is None:
            continue
        sig, vec = res
        if sig_best is None:
            sig_best = sig
        elif sig != sig_best:
            # prefer the signature with the larger rank (fewer coincidences mod p)
            if fingerprint_key is not None and fingerprint_key(sig) > fingerprint_key(sig_best):
                sig_best = sig
                lifter = ModularLifter()
                last = None
            else:
                continue
        lifter.add(vec, p)
        count += 1
        if count < min_primes:
            continue
        rec = lifter.reconstruct()
        if rec is not None and rec == last:
            if verify is None or verify(sig_best, rec):
                return sig_best, rec
        last = rec
    raise ArithmeticError("modular reconstruction did not stabilize")


def nullspace_modular(int_rows: Sequence[Sequence[int]], max_primes: int = 400) -> list[list[Fraction]]:
    """Kernel basis of an integer matrix via CRT over many primes.

    The result is certified: every returned vector is checked exactly, and
    the kernel dimension over Q is at most the dimension modulo any prime,
    so a verified basis of the modular dimension is complete.
    """
    rows = [list(r) for r in int_rows]
    ncols = len(rows[0])
    nrows = len(rows)

    def compute(p):
        a = np.array([[x % p for x in r] for r in rows], dtype=np.int64).reshape(nrows, ncols)
        R, piv = rref_mod_p(a, p)
        free = [c for c in range(ncols) if c not in set(piv)]
        flat = []
        for f in free:
            for i in range(len(piv)):
                flat.append(int(-R[i, f]) % p)
        return (tuple(piv),), flat

    def verify(sig, rec):
        piv = list(sig[0])
        basis = _assemble(piv, rec, ncols)
        for v in basis:
            den = 1
            for x in v:
                den = lcm(den, x.denominator)
            iv = [int(x * den) for x in v]
            for r in rows:
                if sum(a * b for a, b in zip(r, iv) if a and b):
                    return False
        return True

    sig, rec = lift_modular(compute, fingerprint_key=lambda s: len(s[0]), verify=verify,
                            max_primes=max_primes)
    return _assemble(list(sig[0]), rec, ncols)


def _assemble(piv: list[int], flat: list[Fraction], ncols: int) -> list[list[Fraction]]:
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    it = iter(flat)
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for pc in piv:
            v[pc] = next(it)
        basis.append(v)
    return basis


# ---------------------------------------------------------------------- front door


def nullspace_basis(matrix: Sequence[Sequence], ncols: int | None = None, method: str = "auto") -> list[list]:
    """Reduced-echelon basis of the right kernel.

    Entries may be ints/Fractions, quotient-ring elements (field moduli
    only) or GF(p) elements; mixing domains is an error.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        if ncols is None:
            raise ValueError("empty matrix needs ncols")
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")
    kinds = set()
    for r in rows:
        for x in r:
            if isinstance(x, QElem):
                kinds.add(("q", id(x.ring)))
            elif isinstance(x, GF):
                kinds.add(("gf", x.p))
            elif isinstance(x, (int, Fraction)):
                kinds.add(("rat",))
            else:
                raise TypeError(f"unsupported entry {type(x).__name__}")
    non_rat = {k for k in kinds if k[0] != "rat"}
    if len(non_rat) > 1:
        raise ValueError("mixed domains in matrix")
    if non_rat:
        kind, ring = _domain_of(rows)
        if kind == "quotient":
            one, zero = ring.one(), ring.zero()
            rows = [[x if isinstance(x, QElem) else ring.from_coeffs([x]) for x in r] for r in rows]
        else:
            one, zero = GF(1, ring), GF(0, ring)
            rows = [[x if isinstance(x, GF) else GF(int(x), ring) for x in r] for r in rows]
        red, piv = gauss_jordan(rows, one, zero)
        return kernel_from_rref(red, piv, n, one, zero)
    ints = _integer_rows(rows)
    size = len(ints) * n
    if method == "modular" or (method == "auto" and size > 4000 and _height(ints) > 60):
        return nullspace_modular(ints)
    red, piv = bareiss_rref(ints)
    return kernel_from_rref(red, piv, n, Fraction(1), Fraction(0))


def _height(rows) -> int:
    return max((abs(x).bit_length() for r in rows for x in r), default=0)


def rank(matrix: Sequence[Sequence]) -> int:
    if not matrix:
        return 0
    return len(matrix[0]) - len(nullspace_basis(matrix))


def determinant(matrix: Sequence[Sequence]):
    """Exact determinant over a commutative ring by Laplace expansion with memoization
    (suitable for small matrices with polynomial entries)."""
    n = len(matrix)
    memo: dict[tuple[int, int], object] = {}

    def minor(row: int, cols: int):
        if row == n:
            return 1
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = None
        sign = 1
        for c in range(n):
            if cols >> c & 1:
                continue
            entry = matrix[row][c]
            if entry != 0:
                term = entry * minor(row + 1, cols | (1 << c))
                if sign < 0:
                    term = -term
                acc = term if acc is None else acc + term
            sign = -sign
        if acc is None:
            acc = 0 * matrix[0][0]
        memo[key] = acc
        return acc

    return minor(0, 0)


def det_mod_p(a: np.ndarray, p: int) -> int:
    A = np.array(a, dtype=np.int64) % p
    n = A.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(A[c:, c])[0]
        if nz.size == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            A[[c, i]] = A[[i, c]]
            det = -det
        piv = int(A[c, c])
        det = det * piv % p
        inv = pow(piv, -1, p)
        f = (A[c + 1:, c] * inv) % p
        A[c + 1:] = (A[c + 1:] - (f[:, None] * A[c][None, :]) % p) % p
    return det % p


def solve_rational(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One solution of rows * x = rhs (None if inconsistent)."""
    aug = [list(r) + [-b] for r, b in zip(rows, rhs)]
    ker = nullspace_basis(aug)
    n = len(rows[0])
    for v in ker:
        if v[n] != 0:
            return [x / v[n] for x in v[:n]]
    return None


def in_span(vectors: Sequence[Sequence], target: Sequence) -> bool:
    if not vectors:
        return all(x == 0 for x in target)
    r0 = rank(vectors)
    return rank(list(vectors) + [list(target)]) == r0


def span_equal(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(list(a) + list(b))


def row_space_basis(vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    """Canonical RREF basis of the row space (over Q)."""
    if not vectors:
        return []
    red, _ = bareiss_rref(_integer_rows(vectors))
    return red
