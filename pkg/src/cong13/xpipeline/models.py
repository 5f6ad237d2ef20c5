"""Models of X_E(13,1) and X_E(13,2) and their j-maps.

``build_model`` runs the point-to-cubics pipeline on the twisted scheme,
recovers the apolar quartic T with respect to the invariant quadric, and
rescales it into the curve quartic:

* k = 1: the invariant quartic is lambda*T + 3*Q^2, scaled so that it takes
  the value -1 at the tautological point (1:0:...:0); the curve is cut out
  by the cubics and quartic + Q^2.
* k = 2: the invariant quartic is lambda*T + 48*D*Q^2 with D = 4a^3 + 27b^2,
  scaled so that its x1^3*x2 coefficient is 48a; the curve is cut out by
  the cubics and quartic + 16*D*Q^2.  ``calibrate_k2`` recomputes the scalar
  from a known point on a known curve and confirms the rule.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..exactalg.poly import SparsePoly
from ..repgroup.forms import hessian_inverse, n_matrix
from .points import SchemeError, twist_scheme
from .spaces import (XVARS, FormSpace, apolar_complement, cubics_from_partials, quadrics_through,
                     syzygy_support_span, unique_apolar_quartic)

_ABVARS = XVARS + ("a", "b")

Q_TEXT = {
    1: ("x1^2 - 6*x2^2 + a*x3^2 + 9*b*x3*x6 - 6*a*x4^2 + 18*b*x4*x5 + 24*a^2*x4*x7"
        " + 2*a^2*x5^2 - 36*a*b*x5*x7 - 3*a^2*x6^2 + 162*b^2*x7^2"),
    2: "x1*x7 + x2*x6 + x3*x5 + x4^2",
}

# Alternating 3-forms: {(i, j, k): coefficient text} with 1-based indices
PHI_TEXT = {
    1: {(1, 2, 7): "12", (1, 3, 5): "-2", (1, 3, 6): "-3", (1, 4, 5): "6", (1, 4, 6): "6",
        (1, 5, 7): "12*a", (1, 6, 7): "12*a", (2, 3, 5): "-6", (2, 3, 6): "-6", (2, 4, 5): "12",
        (2, 4, 6): "18", (2, 5, 7): "24*a", (2, 6, 7): "36*a", (3, 4, 7): "-12*a",
        (3, 5, 7): "18*b", (4, 6, 7): "54*b", (5, 6, 7): "12*a^2"},
    2: {(1, 4, 7): "1", (1, 5, 6): "-1", (2, 3, 7): "-1", (2, 4, 6): "-1", (3, 4, 5): "-1"},
}

# Weights of x1..x7 under which the cubics are graded (a, b have weights 2, 3)
WEIGHTS = {1: (3, 3, 2, 2, 1, 1, 0), 2: (2, 2, 1, 1, 1, 0, 0)}
CUBIC_WEIGHTS = {1: (6, 7, 7, 8, 8, 9, 9), 2: (4, 5, 5, 6, 6, 6, 7)}


class ModelError(ArithmeticError):
    pass


def specialize(text: str, a, b, vars: Sequence[str] = XVARS) -> SparsePoly:
    """Parse a polynomial in x1..x7 with symbolic a, b and substitute numbers."""
    f = SparsePoly.parse(text, tuple(vars) + ("a", "b"))
    a, b = Fraction(a), Fraction(b)
    n = len(vars)
    out: dict[tuple, Fraction] = {}
    for e, c in f.items():
        key = e[:n]
        out[key] = out.get(key, 0) + c * a ** e[n] * b ** e[n + 1]
    return SparsePoly.from_dict(vars, out)


def published_q(k: int, a, b) -> SparsePoly:
    return specialize(Q_TEXT[k], a, b)


def published_phi(k: int, a, b) -> dict[tuple[int, int, int], Fraction]:
    out = {}
    for (i, j, l), text in PHI_TEXT[k].items():
        c = specialize(text, a, b, ()).terms.get(0, 0)
        out[(i - 1, j - 1, l - 1)] = Fraction(c)
    return out


def discriminant_d(a, b) -> Fraction:
    a, b = Fraction(a), Fraction(b)
    return 4 * a ** 3 + 27 * b ** 2


@dataclass
class TwistModel:
    k: int
    a: Fraction
    b: Fraction
    cubics: FormSpace
    Q: SparsePoly
    apolar: SparsePoly  # the invariant quartic minus c*Q^2, with c = 3 or 48D
    F: SparsePoly  # the invariant quartic
    phi: dict
    dims: tuple[int, ...] = ()
    meta: dict = field(default_factory=dict)

    @property
    def D(self) -> Fraction:
        return discriminant_d(self.a, self.b)

    @property
    def curve_quartic(self) -> SparsePoly:
        c = 1 if self.k == 1 else 16 * self.D
        return self.F + self.Q * self.Q * c

    def equations(self) -> list[SparsePoly]:
        return self.cubics.forms() + [self.curve_quartic]

    def on_cubics(self, pt) -> bool:
        pt = [Fraction(x) for x in pt]
        return all(f(pt) == 0 for f in self.cubics.forms())

    def on_curve(self, pt) -> bool:
        pt = [Fraction(x) for x in pt]
        return self.on_cubics(pt) and self.curve_quartic(pt) == 0


def run_pipeline(scheme):
    U = quadrics_through(scheme)
    Up = apolar_complement(U)
    V = syzygy_support_span(Up)
    W = cubics_from_partials(V)
    return W, (U.dim, Up.dim, V.dim, W.dim)


def _x1_cubed_x2(f: SparsePoly) -> Fraction:
    return Fraction(f.coeff((3, 1, 0, 0, 0, 0, 0)))


def build_model(k: int, a, b, scale_rule: str = "published") -> TwistModel:
    """Equations for X_E(13,k) with E: y^2 = x^3 + a x + b (ab(4a^3+27b^2) != 0)."""
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    a, b = Fraction(a), Fraction(b)
    scheme = twist_scheme(k, a, b)
    W, dims = run_pipeline(scheme)
    q = published_q(k, a, b)
    T = unique_apolar_quartic(W, q)
    D = discriminant_d(a, b)
    e1 = [Fraction(1)] + [Fraction(0)] * 6
    if k == 1:
        t0 = T(e1)
        if t0 == 0:
            raise ModelError("apolar quartic vanishes at the tautological point")
        lam = Fraction(-4) / t0
        apolar = T * lam
        F = apolar + q * q * 3
    else:
        lead = _x1_cubed_x2(T)
        if lead == 0:
            raise ModelError("apolar quartic has no x1^3*x2 term")
        lam = 48 * a / lead
        apolar = T * lam
        F = apolar + q * q * (48 * D)
    model = TwistModel(k, a, b, W, q, apolar, F, published_phi(k, a, b), dims,
                       {"squarefree_R1": scheme.meta["squarefree"], "R1": scheme.meta["R1"]})
    return model


def calibrate_k2(a, b, point) -> Fraction:
    """Scalar mu with (model.F rescaled by mu on its apolar part) vanishing on the curve at ``point``.

    Returns the factor by which the apolar part of the k = 2 invariant quartic
    must be multiplied so that F + 16 D Q^2 vanishes at the given point.  A
    value of 1 confirms the published-coefficient scaling rule.
    """
    m = build_model(2, a, b)
    pt = [Fraction(x) for x in point]
    if not m.on_cubics(pt):
        raise ModelError("calibration point is not on the cubics")
    t = m.apolar(pt)
    if t == 0:
        raise ModelError("calibration point does not constrain the scalar")
    q = m.Q(pt)
    return -64 * m.D * q * q / t


# ------------------------------------------------------------------ j-map


@dataclass
class _JData:
    hinv: list
    hq: list
    N: list
    gradF: list




def _jdata(model: TwistModel) -> _JData:
    cached = model.meta.get("_jdata")
    if cached is not None:
        return cached
    hq = [[Fraction(e.terms.get(0, 0)) for e in row] for row in model.Q.hessian()]
    data = _JData(hessian_inverse(model.Q), hq, n_matrix(model.phi, XVARS), model.F.gradient())
    model.meta["_jdata"] = data
    return data


def _matvec(M, v):
    return [sum((m * x for m, x in zip(row, v) if m), Fraction(0)) for row in M]


def _v3(data: _JData, pt):
    return _matvec(data.hinv, [g(pt) for g in data.gradF])


def covariant_values(model: TwistModel, pt) -> dict[str, object]:
    """v3, v4, v9 and c6 of the model at a rational point."""
    data = _jdata(model)
    pt = [Fraction(x) for x in pt]
    v3 = _v3(data, pt)
    Npt = [[e(pt) if e else Fraction(0) for e in row] for row in data.N]
    v4 = _matvec(data.hinv, _matvec(Npt, v3))
    v9 = _v3(data, v3)
    c6 = sum(x * y for x, y in zip(v4, _matvec(data.hq, v9)))
    return {"v3": v3, "v4": v4, "v9": v9, "c6": c6, "Q": model.Q(pt)}


class Cusp(ArithmeticError):
    """The point is a cusp (j = infinity)."""


def jmap(model: TwistModel, point, check: bool = True) -> Fraction:
    """The j-invariant of the elliptic curve attached to a rational point of the model."""
    pt = [Fraction(x) for x in point]
    if check and not model.on_curve(pt):
        raise ModelError("point is not on the curve")
    vals = covariant_values(model, pt)
    q, c6 = vals["Q"], vals["c6"]
    if q == 0:
        raise Cusp("Q vanishes: the point is a cusp")
    D = model.D
    if model.k == 1:
        return 1728 - D * c6 * c6 / q ** 13
    return 1728 - c6 * c6 / (Fraction(2) ** 40 * D ** 10 * q ** 13)


def j_invariant(a, b) -> Fraction:
    a, b = Fraction(a), Fraction(b)
    return 1728 * 4 * a ** 3 / discriminant_d(a, b)


def model_for_curve(k: int, a, b) -> TwistModel:
    """Model for any nonsingular E.

    For ab != 0 the point pipeline is used.  For ab = 0 (j = 0 or 1728) the
    scheme degenerates, so the cubics are taken as the forms apolar to the
    shipped invariant quartic specialized at (a, b); when k = 1 and E has a
    rational 2-torsion point leading to a curve F with AB != 0, the cubics
    are also checked against the pullback of the pipeline model of
    X_F(13,2) under the 2-isogeny substitution.
    """
    a, b = Fraction(a), Fraction(b)
    if a != 0 and b != 0:
        return build_model(k, a, b)
    from .isogeny import isogenous_curve, pullback_space, rational_roots_of_cubic, two_isogeny_transport
    from .symbolic import model_from_quartic

    model = model_from_quartic(k, a, b)
    if k == 1:
        for th in rational_roots_of_cubic(a, b):
            A, B = isogenous_curve(a, b, th)
            if A != 0 and B != 0 and discriminant_d(A, B) != 0:
                other = build_model(2, A, B)
                pulled = pullback_space(other.cubics, two_isogeny_transport(a, b, th))
                if not pulled.same_span(model.cubics):
                    raise ModelError("2-isogeny transport disagrees with the quartic model")
                model.meta["transport_checked"] = {"theta": str(th), "F": [str(A), str(B)]}
                break
    return model


# ------------------------------------------------------------------ serialization


def model_to_json(model: TwistModel) -> dict:
    from ..exactalg.serialize import poly_to_json, rational_str

    return {
        "k": model.k,
        "a": rational_str(model.a),
        "b": rational_str(model.b),
        "cubics": [poly_to_json(f) for f in model.cubics.forms()],
        "quartic": poly_to_json(model.F),
        "curve_quartic": poly_to_json(model.curve_quartic),
        "Qform": poly_to_json(model.Q),
        "Phi": [[i + 1, j + 1, l + 1, rational_str(c)] for (i, j, l), c in sorted(model.phi.items())],
        "pipeline_dims": list(model.dims),
    }


def model_from_json(d: dict) -> TwistModel:
    from ..exactalg.serialize import poly_from_json

    k = int(d["k"])
    a, b = Fraction(d["a"]), Fraction(d["b"])
    cubics = FormSpace.from_forms([poly_from_json(f) for f in d["cubics"]], 3)
    Fq = poly_from_json(d["quartic"])
    q = poly_from_json(d["Qform"])
    c = 3 if k == 1 else 48 * discriminant_d(a, b)
    phi = {(int(i) - 1, int(j) - 1, int(l) - 1): Fraction(v) for i, j, l, v in d["Phi"]}
    return TwistModel(k, a, b, cubics, q, Fq - q * q * c, Fq, phi, tuple(d.get("pipeline_dims", ())))


# ------------------------------------------------------------------ gradings


def weight_substitution(k: int, lam) -> list[Fraction]:
    lam = Fraction(lam)
    return [lam ** w for w in WEIGHTS[k]]


def rescale_space(space: FormSpace, scales: Sequence[Fraction]) -> FormSpace:
    """Image of a space under x_i -> scales[i] * x_i."""
    gens = SparsePoly.gens(space.vars)
    images = [g * s for g, s in zip(gens, scales)]
    return FormSpace.from_forms([f.substitute(images) for f in space.forms()], space.degree)


def alternating_n(phi) -> list[list[SparsePoly]]:
    return n_matrix(phi, XVARS)


__all__ = [
    "TwistModel", "ModelError", "model_for_curve", "model_to_json", "model_from_json", "Cusp", "SchemeError", "build_model", "calibrate_k2", "jmap",
    "j_invariant", "published_q", "published_phi", "covariant_values", "run_pipeline",
    "weight_substitution", "rescale_space", "discriminant_d", "WEIGHTS", "CUBIC_WEIGHTS",
]
