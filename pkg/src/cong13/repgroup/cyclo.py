"""Exact 7x7 matrices over Z[zeta_13, 1/13] stored as numpy integer arrays.

A matrix is ``(arr, e)`` meaning ``arr / 13**e`` where ``arr`` has shape
(7, 7, 12): entry [i, j, k] is the coefficient of zeta**k in the power basis
of Q(zeta) modulo Phi_13.  This keeps the 1092-element closure fast while
remaining exact.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..exactalg.rings import QElem, QuotientRing, cyclotomic_ring, legendre

ELL = 13
DIM = 7


def reduce_cyclic(a: np.ndarray) -> np.ndarray:
    """Reduce trailing axis of length >= 13 modulo x^13 - 1 and then Phi_13."""
    n = a.shape[-1]
    out = np.zeros(a.shape[:-1] + (ELL,), dtype=a.dtype)
    for k in range(n):
        out[..., k % ELL] += a[..., k]
    top = out[..., ELL - 1].copy()
    out = out[..., : ELL - 1] - top[..., None]
    return out


class CycloMatrix:
    __slots__ = ("arr", "e", "_key")

    def __init__(self, arr: np.ndarray, e: int = 0):
        arr = np.asarray(arr, dtype=np.int64)
        while e > 0 and not np.any(arr % ELL):
            arr = arr // ELL
            e -= 1
        self.arr = arr
        self.e = e
        self._key = None

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = self.arr.tobytes() + bytes([self.e])
        return self._key

    def __hash__(self):
        return hash(self.key)

    def __eq__(self, other):
        return isinstance(other, CycloMatrix) and self.key == other.key

    def __matmul__(self, other: "CycloMatrix") -> "CycloMatrix":
        a, b = self.arr, other.arr
        prod = np.zeros((DIM, DIM, 2 * (ELL - 1) - 1), dtype=np.int64)
        for k in range(ELL - 1):
            # contribution of zeta^k from a times all powers from b
            prod[:, :, k:k + ELL - 1] += np.einsum("ij,jkl->ikl", a[:, :, k], b)
        return CycloMatrix(reduce_cyclic(prod), self.e + other.e)

    def is_identity(self) -> bool:
        return self == identity()

    def is_scalar_root_of_unity(self) -> bool:
        return self.is_identity()

    def entry(self, i: int, j: int, ring: QuotientRing | None = None) -> QElem:
        ring = ring or cyclotomic_ring()
        coeffs = [Fraction(int(c), ELL ** self.e) for c in self.arr[i, j]]
        return ring.from_coeffs(coeffs)

    def to_qelem_rows(self, ring: QuotientRing | None = None) -> list[list[QElem]]:
        ring = ring or cyclotomic_ring()
        return [[self.entry(i, j, ring) for j in range(DIM)] for i in range(DIM)]

    def galois(self, k: int) -> "CycloMatrix":
        """Apply zeta -> zeta**k to every entry."""
        full = np.zeros((DIM, DIM, ELL), dtype=np.int64)
        for a in range(ELL - 1):
            full[:, :, (a * k) % ELL] += self.arr[:, :, a]
        top = full[:, :, ELL - 1].copy()
        return CycloMatrix(full[:, :, : ELL - 1] - top[:, :, None], self.e)

    def mod_p(self, p: int, zeta: int) -> np.ndarray:
        pw = np.array([pow(zeta, k, p) for k in range(ELL - 1)], dtype=np.int64)
        inv = pow(pow(ELL, self.e, p), -1, p)
        out = (self.arr % p) * pw[None, None, :] % p
        return (out.sum(axis=2) % p) * inv % p

    def trace_coeffs(self) -> np.ndarray:
        return sum(self.arr[i, i] for i in range(DIM))


def identity() -> CycloMatrix:
    arr = np.zeros((DIM, DIM, ELL - 1), dtype=np.int64)
    for i in range(DIM):
        arr[i, i, 0] = 1
    return CycloMatrix(arr)


def _zeta_power(k: int) -> np.ndarray:
    v = np.zeros(ELL, dtype=np.int64)
    v[k % ELL] = 1
    return reduce_cyclic(v[None, :])[0]


def _xi(k: int) -> np.ndarray:
    return _zeta_power(k) + _zeta_power(-k)


GAUSS = sum(legendre(k, ELL) * _zeta_power(k) for k in range(1, ELL))

# weights of the diagonal generator on x0..x6
M13_WEIGHTS = (0, 1, 4, 3, 12, 9, 10)


def m2_raw() -> np.ndarray:
    """sqrt(13) * M2: row 0 all ones, column 0 below it all twos, xi values elsewhere."""
    raw = np.zeros((DIM, DIM, ELL - 1), dtype=np.int64)
    for j in range(DIM):
        raw[0, j] = _zeta_power(0)
    for i in range(1, DIM):
        raw[i, 0] = 2 * _zeta_power(0)
        for j in range(1, DIM):
            raw[i, j] = _xi(pow(2, i + j - 1, ELL))
    return raw


def cyclo_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Multiply arrays of Z[zeta] elements (trailing axis of length 12) elementwise."""
    prod = np.zeros(np.broadcast_shapes(a.shape[:-1], b.shape[:-1]) + (2 * ELL - 3,), dtype=np.int64)
    for k in range(ELL - 1):
        prod[..., k:k + ELL - 1] += a[..., k:k + 1] * b
    return reduce_cyclic(prod)


def m2() -> CycloMatrix:
    """(1/sqrt 13) times the matrix of xi values, with 1/sqrt 13 = Gauss sum / 13."""
    return CycloMatrix(cyclo_mul(m2_raw(), GAUSS), 1)


def m6() -> CycloMatrix:
    arr = np.zeros((DIM, DIM, ELL - 1), dtype=np.int64)
    arr[0, 0, 0] = -1
    arr[1, 6, 0] = -1
    for i in range(2, DIM):
        arr[i, i - 1, 0] = -1
    return CycloMatrix(arr)


def m13() -> CycloMatrix:
    arr = np.zeros((DIM, DIM, ELL - 1), dtype=np.int64)
    for i, w in enumerate(M13_WEIGHTS):
        arr[i, i] = _zeta_power(w)
    return CycloMatrix(arr)


def generators() -> dict[str, CycloMatrix]:
    return {"M2": m2(), "M6": m6(), "M13": m13()}


def tilde(g: CycloMatrix) -> CycloMatrix:
    """The image of g under zeta -> zeta^2 (the skew action)."""
    return g.galois(2)
