"""Checking identities on X(13) and on X(13) x X(13) at the special orbits over finite fields.

A bihomogeneous form of bidegree (m, n) with m, n <= 23 that vanishes at every
pair of points of X whose j-invariants lie in {0, 1728, infinity} vanishes on
X x X (the three orbits have 994 > 42 * 23 points, and X has degree 42).  The
same count applies to a single form of degree <= 23 on X.  Identities of
higher degree are still evaluated on the orbits, but the verdict records that
the Bezout argument does not cover them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ..exactalg.poly import SparsePoly, unpack
from .group import all_special_points
from .modp import SpecialField, matmul_mod, special_fields, to_modp

BEZOUT_BOUND = 23
MIN_FIELDS = 3
ORBIT_SIZES = {"cusp": 84, "0": 364, "1728": 546}


class OrbitError(RuntimeError):
    pass


@dataclass
class IdentityVerdict:
    passed: bool
    primes: list[int]
    degree: tuple[int, ...]
    bezout_certified: bool
    points_checked: int
    failures: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"passed": self.passed, "primes": self.primes, "degree": list(self.degree),
                "bezout_certified": self.bezout_certified, "points_checked": self.points_checked,
                "failures": {str(p): n for p, n in self.failures.items()}}


def orbit_points(fld: SpecialField) -> np.ndarray:
    """All 994 special points of X over the field, stacked (cusps, j = 0, j = 1728)."""
    orbits = all_special_points(fld)
    for name, size in ORBIT_SIZES.items():
        if len(orbits[name]) != size:
            raise OrbitError(f"orbit {name} over F_{fld.p} has {len(orbits[name])} points, expected {size}")
    return np.concatenate([orbits[name] for name in ORBIT_SIZES])


def _poly_table(f: SparsePoly, split: int, p: int, zeta: int) -> tuple[list, list, dict]:
    """Group the terms of f by their y-exponent: {y_exp: [(x_exp, coeff mod p)]}."""
    groups: dict[tuple[int, ...], list] = {}
    for key, c in f.terms.items():
        e = unpack(key, f.nvars)
        v = to_modp(c, p, zeta)
        if v:
            groups.setdefault(e[split:], []).append((e[:split], v))
    return groups


def _monomial_values(pts: np.ndarray, exps: Sequence[tuple[int, ...]], p: int) -> np.ndarray:
    """Matrix (n_pts, len(exps)) of monomial values."""
    maxdeg = max((max(e) for e in exps), default=0)
    n_pts, n = pts.shape
    powers = np.ones((n, maxdeg + 1, n_pts), dtype=np.int64)
    for d in range(1, maxdeg + 1):
        powers[:, d, :] = powers[:, d - 1, :] * pts.T % p
    out = np.ones((n_pts, len(exps)), dtype=np.int64)
    for j, e in enumerate(exps):
        col = np.ones(n_pts, dtype=np.int64)
        for i, d in enumerate(e):
            if d:
                col = col * powers[i, d] % p
        out[:, j] = col
    return out


def eval_on_pairs(f: SparsePoly, pts: np.ndarray, p: int, zeta: int) -> np.ndarray:
    """Matrix V[i, j] = f(pts[i], pts[j]) mod p for a form in 14 variables (x first, then y)."""
    groups = _poly_table(f, 7, p, zeta)
    yexps = sorted(groups)
    xexps = sorted({xe for terms in groups.values() for xe, _ in terms})
    xi = {e: i for i, e in enumerate(xexps)}
    coeff = np.zeros((len(xexps), len(yexps)), dtype=np.int64)
    for j, ye in enumerate(yexps):
        for xe, v in groups[ye]:
            coeff[xi[xe], j] = (coeff[xi[xe], j] + v) % p
    if not yexps:
        return np.zeros((len(pts), len(pts)), dtype=np.int64)
    X = _monomial_values(pts, xexps, p)
    Y = _monomial_values(pts, yexps, p)
    C = matmul_mod(X, coeff, p)  # c_beta(P) for each y-monomial beta
    return matmul_mod(C, Y.T.copy(), p)


def eval_on_points(f: SparsePoly, pts: np.ndarray, p: int, zeta: int) -> np.ndarray:
    groups = _poly_table(f, f.nvars, p, zeta)
    terms = groups.get((), [])
    if not terms:
        return np.zeros(len(pts), dtype=np.int64)
    exps = [e for e, _ in terms]
    coeffs = np.array([v for _, v in terms], dtype=np.int64)
    return matmul_mod(_monomial_values(pts, exps, p), coeffs, p)


def _bidegree(f: SparsePoly) -> tuple[int, ...]:
    if f.nvars == 7:
        return (f.degree(),)
    if f.nvars != 14:
        raise ValueError("forms must be in 7 or 14 variables")
    degs = {(sum(e[:7]), sum(e[7:])) for e, _ in f.items()}
    if len(degs) > 1:
        raise ValueError("form is not bihomogeneous")
    return degs.pop() if degs else (0, 0)


def identity_check_on_curve(identity: SparsePoly | Callable, degree: Sequence[int] | None = None,
                            fields: Sequence[SpecialField] | None = None,
                            bound: int = BEZOUT_BOUND) -> IdentityVerdict:
    """Evaluate an identity at all special points (or pairs of them) over several finite fields.

    ``identity`` is a form in x0..x6, a bihomogeneous form in x0..x6, y0..y6,
    or a callable ``fn(points, field) -> values mod p`` (then ``degree`` gives its degree).
    """
    fields = list(fields) if fields is not None else list(special_fields(MIN_FIELDS))
    if len(fields) < 1:
        raise ValueError("need at least one field")
    if isinstance(identity, SparsePoly):
        deg = _bidegree(identity)
        if identity.nvars == 14 and max(deg) > bound:
            raise ValueError(f"bidegree {deg} exceeds {bound}")
    else:
        if degree is None:
            raise ValueError("a callable identity needs its degree")
        deg = tuple(degree)
    certified = max(deg) <= bound
    primes, failures, checked = [], {}, 0
    for fld in fields:
        pts = orbit_points(fld)
        p = fld.p
        if isinstance(identity, SparsePoly) and identity.nvars == 14:
            vals = eval_on_pairs(identity, pts, p, fld.zeta)
        elif isinstance(identity, SparsePoly):
            vals = eval_on_points(identity, pts, p, fld.zeta)
        else:
            vals = np.asarray(identity(pts, fld), dtype=np.int64) % p
        bad = int(np.count_nonzero(vals))
        checked += vals.size
        primes.append(p)
        if bad:
            failures[p] = bad
    return IdentityVerdict(not failures, primes, deg, certified, checked, failures)


# ---------------------------------------------------------------- named determinant identities


def _pow_mod_vec(x: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(x)
    base = x % p
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out


def determinant_identity(which: str) -> Callable:
    """The determinant identities for (v1, v3, v4, v9, v10, v12, v13) and (w4, ..., w13) as callables.

    Each returns det(...) - rhs at the given points, where rhs is (c6^2 - 1728 Q^13)^2,
    multiplied by 2Q in the skew case.
    """
    from .covariants import PointwiseCovariants

    names = {"plain": ["v1", "v3", "v4", "v9", "v10", "v12", "v13"],
             "skew": ["w4", "w5", "w6", "w7", "w8", "w11", "w13"]}[which]

    def fn(pts: np.ndarray, fld: SpecialField) -> np.ndarray:
        p = fld.p
        pc = PointwiseCovariants(p)
        q = pc.Q(pts)
        c6 = pc.c6(pts)
        base = (c6 * c6 - 1728 * _pow_mod_vec(q, 13, p)) % p
        rhs = base * base % p
        if which == "skew":
            rhs = 2 * q % p * rhs % p
        return (pc.det(names, pts) - rhs) % p

    return fn


DETERMINANT_DEGREES = {"plain": (52,), "skew": (54,)}
