"""Named covariants of X(13): symbolic construction and pointwise evaluation mod p.

The low-degree covariants (v3, v4, w3, w4) are built symbolically.  The
higher ones are composites; symbolically they are expanded on demand, while
``PointwiseCovariants`` evaluates them at batches of F_p points through the
defining compositions and t-coefficient extractions (interpolation in t).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from ..exactalg.poly import SparsePoly
from . import forms as fm
from .modp import PolyModP, eval_many, interpolate_coeff

PLAIN = "plain"
SKEW = "skew"

REGISTRY = ("v1", "v3", "v4", "v9", "v10", "v12", "v13",
            "w3", "w4", "w5", "w6", "w7", "w8", "w11", "w13")
DEGREES = {"v1": 1, "v3": 3, "v4": 4, "v9": 9, "v10": 10, "v12": 12, "v13": 13,
           "w3": 3, "w4": 4, "w5": 5, "w6": 6, "w7": 7, "w8": 8, "w11": 11, "w13": 13}


class UnknownCovariant(KeyError):
    pass


@dataclass(frozen=True)
class CovariantVector:
    name: str
    entries: tuple[SparsePoly, ...]
    degree: int
    kind: str


def _kind(name: str) -> str:
    return SKEW if name.startswith("w") else PLAIN


@lru_cache(maxsize=None)
def _symbolic(name: str) -> tuple[SparsePoly, ...]:
    Q = fm.Q()
    gens = tuple(SparsePoly.gens(fm.XVARS))
    if name == "v1":
        return gens
    if name == "v3":
        return tuple(fm.grad_q(Q, fm.F()))
    if name == "v4":
        hinv = fm.hessian_inverse(Q)
        return tuple(fm.mat_vec(hinv, fm.mat_vec(fm.N_x13(), _symbolic("v3"))))
    if name == "v9":
        return tuple(fm.compose_vec(_symbolic("v3"), _symbolic("v3")))
    if name == "v12":
        return tuple(fm.compose_vec(_symbolic("v3"), _symbolic("v4")))
    if name == "v10":
        return tuple(fm.directional_coeff(_symbolic("v4"), _symbolic("v3"), 3))
    if name == "v13":
        return tuple(fm.directional_coeff(_symbolic("v4"), _symbolic("v4"), 3))
    if name == "w3":
        return fm.cubics_w3()
    if name == "w4":
        return fm.quartics_w4()
    seeds = {"w5": ("w3", 1), "w6": ("w4", 1), "w7": ("w3", 2), "w8": ("w4", 2),
             "w11": ("w5", 3), "w13": ("w5", 4)}
    if name in seeds:
        base, k = seeds[name]
        return tuple(fm.directional_coeff(_symbolic(base), _symbolic("v3"), k))
    raise UnknownCovariant(name)


def named_covariant(name: str) -> CovariantVector:
    """Construct a covariant from Q, F, N and the skew seeds."""
    if name not in REGISTRY:
        raise UnknownCovariant(name)
    return CovariantVector(name, _symbolic(name), DEGREES[name], _kind(name))


def dot(v, w) -> SparsePoly:
    """v . w = v^T H(Q) w."""
    return fm.dot_q(fm.constant_matrix(fm.Q().hessian()), v, w)


@lru_cache(maxsize=1)
def c6_symbolic() -> SparsePoly:
    """c6 = v4 . v9, an invariant of degree 13."""
    return dot(_symbolic("v4"), _symbolic("v9"))


# ---------------------------------------------------------------- pointwise

VecFn = Callable[[np.ndarray], np.ndarray]


class PointwiseCovariants:
    """Evaluate the named covariants at batches of points over F_p.

    All inputs/outputs are arrays of shape (N, 7).
    """

    def __init__(self, p: int):
        self.p = p
        self._polys: dict[str, list[PolyModP]] = {}
        hq = fm.constant_matrix(fm.Q().hessian())
        self.hq = np.array([[int(c) % p for c in row] for row in hq], dtype=np.int64)
        self.q = PolyModP(fm.Q(), p)

    def _poly_vec(self, name: str) -> list[PolyModP]:
        if name not in self._polys:
            self._polys[name] = [PolyModP(f, self.p) for f in _symbolic(name)]
        return self._polys[name]

    def _eval_symbolic(self, name: str, pts: np.ndarray) -> np.ndarray:
        return np.stack(eval_many(self._poly_vec(name), pts), axis=1)

    def _directional(self, fn: VecFn, direction: np.ndarray, pts: np.ndarray, deg: int, k: int) -> np.ndarray:
        nodes = list(range(deg + 1))
        vals = np.stack([fn((pts + t * direction) % self.p) for t in nodes])
        return interpolate_coeff(vals, nodes, k, self.p)

    def evaluate(self, name: str, pts: np.ndarray) -> np.ndarray:
        p = self.p
        pts = np.asarray(pts, dtype=np.int64) % p
        if name == "v1":
            return pts
        if name in ("v3", "v4", "w3", "w4"):
            return self._eval_symbolic(name, pts)
        ev = self.evaluate
        if name == "v9":
            return ev("v3", ev("v3", pts))
        if name == "v12":
            return ev("v3", ev("v4", pts))
        if name == "v10":
            return self._directional(lambda y: ev("v4", y), ev("v3", pts), pts, 4, 3)
        if name == "v13":
            return self._directional(lambda y: ev("v4", y), ev("v4", pts), pts, 4, 3)
        seeds = {"w5": ("w3", 3, 1), "w6": ("w4", 4, 1), "w7": ("w3", 3, 2), "w8": ("w4", 4, 2),
                 "w11": ("w5", 5, 3), "w13": ("w5", 5, 4)}
        if name in seeds:
            base, deg, k = seeds[name]
            return self._directional(lambda y: ev(base, y), ev("v3", pts), pts, deg, k)
        raise UnknownCovariant(name)

    def dot(self, v: np.ndarray, w: np.ndarray) -> np.ndarray:
        p = self.p
        hw = (w @ self.hq.T) % p  # H(Q) entries are tiny
        return (v * hw % p).sum(axis=1) % p

    def Q(self, pts: np.ndarray) -> np.ndarray:
        return self.q(pts)

    def c6(self, pts: np.ndarray) -> np.ndarray:
        return self.dot(self.evaluate("v4", pts), self.evaluate("v9", pts))

    def det(self, names, pts: np.ndarray) -> np.ndarray:
        """det of the 7x7 matrix with the given covariants as columns, at each point."""
        cols = [self.evaluate(n, pts) for n in names]
        mats = np.stack(cols, axis=2)  # (N, 7, 7)
        return np.array([det_mod_p_small(m, self.p) for m in mats], dtype=np.int64)


def det_mod_p_small(m: np.ndarray, p: int) -> int:
    a = [[int(x) % p for x in row] for row in m]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] * inv % p
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    return det % p


def registry_json(names=REGISTRY) -> dict:
    """Named covariants in the JSON polynomial format; higher degrees take correspondingly longer to expand."""
    from ..exactalg.serialize import poly_to_json

    out = {}
    for name in names:
        v = named_covariant(name)
        out[name] = {"kind": v.kind, "degree": v.degree, "entries": [poly_to_json(f) for f in v.entries]}
    return out
