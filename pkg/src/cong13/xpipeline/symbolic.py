"""The invariant quartic as a polynomial in x1..x7 with coefficients in Z[a, b].

The quartic is weighted homogeneous (weight 12 for k = 1 and 10 for k = 2,
with a, b of weights 2, 3), so each of its coefficients is a combination of
the few monomials a^i b^j of the right weight.  Those combinations are
recovered by exact interpolation from numerically built models and checked
on a held-out curve.  The result is shipped as package data so that models
for any (a, b), including ab = 0, are available without rerunning the
point pipeline.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Sequence

from ..exactalg.linalg import solve_rational
from ..exactalg.poly import SparsePoly
from ..exactalg.serialize import poly_from_json, poly_to_json
from .spaces import XVARS, apolar_cubics

ABX = XVARS + ("a", "b")
TOTAL_WEIGHT = {1: 12, 2: 10}
DEFAULT_SAMPLES = ((-4, -3), (2, -3), (-5, 2), (1, -10), (3, 5), (-7, 4), (5, -1))
HOLDOUT = (-2, 7)
DATA_FILE = "invariant_quartics.json"


def ab_monomials(w: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(w // 3 + 1) for i in range(w // 2 + 1) if 2 * i + 3 * j == w]


def derive_invariant_quartic(k: int, samples: Sequence[tuple[int, int]] = DEFAULT_SAMPLES,
                             holdout: tuple[int, int] | None = HOLDOUT) -> SparsePoly:
    """Interpolate the quartic over Q[a, b] from models built by the point pipeline."""
    from .models import WEIGHTS, build_model

    weights = WEIGHTS[k]
    models = [build_model(k, a, b) for a, b in samples]
    keys = set()
    for m in models:
        keys.update(e for e, _ in m.F.items())
    out: dict[tuple, Fraction] = {}
    for e in sorted(keys):
        w = TOTAL_WEIGHT[k] - sum(x * y for x, y in zip(e, weights))
        mons = ab_monomials(w) if w >= 0 else []
        if not mons:
            raise ArithmeticError(f"monomial {e} has no admissible coefficient of weight {w}")
        rows = [[Fraction(a) ** i * Fraction(b) ** j for i, j in mons] for a, b in samples]
        rhs = [Fraction(m.F.coeff(e)) for m in models]
        sol = solve_rational(rows, rhs)
        if sol is None:
            raise ArithmeticError(f"coefficient of {e} is not a polynomial of weight {w} in a, b")
        for (i, j), c in zip(mons, sol):
            if c:
                out[tuple(e) + (i, j)] = c
    F = SparsePoly.from_dict(ABX, out)
    if holdout is not None:
        ref = build_model(k, *holdout)
        if specialize_quartic(F, *holdout) != ref.F:
            raise ArithmeticError("interpolated quartic fails on the held-out curve")
    return F


def specialize_quartic(F: SparsePoly, a, b) -> SparsePoly:
    a, b = Fraction(a), Fraction(b)
    out: dict[tuple, Fraction] = {}
    for e, c in F.items():
        key = e[:7]
        out[key] = out.get(key, 0) + c * a ** e[7] * b ** e[8]
    return SparsePoly.from_dict(XVARS, out)


def write_data(path, quartics: dict[int, SparsePoly]) -> None:
    with open(path, "w") as fh:
        json.dump({str(k): poly_to_json(F) for k, F in quartics.items()}, fh, indent=1)


@lru_cache(maxsize=None)
def invariant_quartic(k: int) -> SparsePoly:
    """The shipped quartic over Q[a, b] for k = 1 or 2."""
    text = resources.files("cong13.xpipeline.data").joinpath(DATA_FILE).read_text()
    return poly_from_json(json.loads(text)[str(k)])


def model_from_quartic(k: int, a, b):
    """TwistModel for any (a, b) with 4a^3 + 27b^2 != 0, from the shipped quartic."""
    from .models import TwistModel, discriminant_d, published_phi, published_q

    a, b = Fraction(a), Fraction(b)
    D = discriminant_d(a, b)
    if D == 0:
        raise ValueError("singular curve: 4a^3 + 27b^2 = 0")
    F = specialize_quartic(invariant_quartic(k), a, b)
    q = published_q(k, a, b)
    apolar = F - q * q * (3 if k == 1 else 48 * D)
    W = apolar_cubics(apolar, q)
    return TwistModel(k, a, b, W, q, apolar, F, published_phi(k, a, b), (), {"source": "quartic"})
