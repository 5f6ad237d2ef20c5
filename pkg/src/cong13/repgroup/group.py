"""The group G of order 1092, its reductions mod p and the special orbits on X(13)."""
from __future__ import annotations

from collections import deque
from functools import lru_cache

import numpy as np

from .cyclo import CycloMatrix, generators, identity, tilde
from .modp import SpecialField, special_fields

GROUP_ORDER = 1092
SAFETY_CAP = 5000


class ClosureError(RuntimeError):
    pass


@lru_cache(maxsize=1)
def group_closure(cap: int = SAFETY_CAP) -> tuple[CycloMatrix, ...]:
    """All elements of the group generated by M2, M6, M13, by breadth-first search."""
    gens = list(generators().values())
    start = identity()
    seen = {start: None}
    order = [start]
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for h in gens:
            k = g @ h
            if k not in seen:
                seen[k] = None
                order.append(k)
                if len(order) > cap:
                    raise ClosureError(f"closure exceeds {cap} elements; check the generators")
                queue.append(k)
    return tuple(order)


@lru_cache(maxsize=None)
def group_mod_p(p: int, zeta: int, skew: bool = False) -> np.ndarray:
    """Array of shape (1092, 7, 7): the group (or its image under zeta -> zeta^2) mod p."""
    mats = group_closure()
    return np.stack([(tilde(g) if skew else g).mod_p(p, zeta) for g in mats])


def normalize_projective(pts: np.ndarray, p: int) -> np.ndarray:
    """Scale every row so its first nonzero coordinate is 1."""
    pts = np.asarray(pts, dtype=np.int64) % p
    out = pts.copy()
    for r in range(len(pts)):
        nz = np.nonzero(pts[r])[0]
        if len(nz) == 0:
            raise ValueError("zero vector is not a projective point")
        inv = pow(int(pts[r, nz[0]]), -1, p)
        out[r] = pts[r] * inv % p
    return out


def orbit(point, field: SpecialField) -> np.ndarray:
    """The G-orbit of a projective point over F_p, de-duplicated projectively."""
    p = field.p
    imgs = _apply_all(group_mod_p(p, field.zeta), np.asarray(point, dtype=np.int64) % p, p)
    return _unique_rows(normalize_projective(imgs, p))


def _apply_all(mats: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    out = np.zeros(mats.shape[:2], dtype=np.int64)
    for j in range(mats.shape[2]):
        out = (out + mats[:, :, j] * int(v[j]) % p) % p
    return out


def _unique_rows(a: np.ndarray) -> np.ndarray:
    return np.unique(a, axis=0)


def special_representative(j_class: str, field: SpecialField) -> np.ndarray:
    """One point of X(13) above j = infinity ('cusp'), 0 or 1728, over the given field."""
    p = field.p
    if j_class in ("cusp", "inf", "infinity"):
        pt = [0, 1, 0, 0, 0, 0, 0]
    elif j_class in ("0", 0):
        w, a = field.omega, field.alpha
        pt = [-2] + [w + a, w - a] * 3
    elif j_class in ("1728", 1728):
        b, s1, s2 = field.beta, field.sigma_beta, field.sigma2_beta
        pt = [1, b, s1, s2, b, s1, s2]
    else:
        raise ValueError(f"unknown j class {j_class!r}")
    return np.array(pt, dtype=np.int64) % p


def special_points(j_class: str, field: SpecialField | None = None) -> np.ndarray:
    """Full G-orbit above the given j value (sizes 84, 364, 546)."""
    field = field or special_fields()[0]
    p = field.p
    return orbit(special_representative(j_class, field), field)


def all_special_points(field: SpecialField) -> dict[str, np.ndarray]:
    return {name: special_points(name, field) for name in ("cusp", "0", "1728")}
