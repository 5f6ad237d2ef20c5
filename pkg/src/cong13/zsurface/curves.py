"""Low-genus curves on the surfaces y^2 = F_k(r, s, 1).

Each listed plane curve C in the (r, s)-plane is rational.  Its preimage on
the double cover is governed by the restriction of F_k to a parametrisation
of C: after removing square factors, a constant square means the preimage
splits into two rational curves; otherwise the squarefree part of degree d
gives a hyperelliptic curve of genus ceil(d/2) - 1.

Parametrisations are found by repeatedly projecting from a rational singular
point (a pencil of lines through it) until the residual curve is linear or
quadratic in one of the variables; a quadratic residual is parametrised as a
conic.  Rational sample points come from rational values of the parameter.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import count

import sympy as sp

from ..elliptic import EllipticCurveQ, tate_conductor
from .surface import SurfaceError, _k, r, s, surface_model, rational_sqrt

t = sp.Symbol("t")
_u, _v, _m, _w = sp.symbols("u v m w")

DISCRIMINANT = "discriminant-component"
FAMILY = "family-source"
MODULAR = "modular-curve"
ELLIPTIC = "elliptic"

# Cremona a-invariants of the genus-one modular curves X_0(m)
X0_MODELS = {
    19: (0, 1, 1, -9, -15), 20: (0, 1, 0, 4, 4), 21: (1, 0, 0, -4, -1), 24: (0, -1, 0, -4, 4),
    27: (0, 0, 1, 0, -7), 32: (0, 0, 0, 4, 0), 36: (0, 0, 0, 0, 1), 49: (1, -1, 0, -2, -1),
}
GENUS_ZERO_LEVELS = (10, 18, 25)


@dataclass(frozen=True)
class ListedCurve:
    k: int
    equation: str
    role: str
    level: int | None = None  # m for copies of X_0(m)
    weierstrass: tuple[int, ...] | None = None  # for the elliptic case


LISTED_CURVES: tuple[ListedCurve, ...] = (
    ListedCurve(1, "s", DISCRIMINANT),
    ListedCurve(1, "r + s - 1", DISCRIMINANT),
    ListedCurve(1, "r**2 + s - 1", DISCRIMINANT),
    ListedCurve(1, "r", MODULAR, 10),
    ListedCurve(1, "r + s", MODULAR, 25),
    ListedCurve(1, "r**5 + r**4*s - 3*r**4 - r**3*s + 2*r**2*s**2 - 4*r**2*s - 2*r*s**2 + s**3 - 4*s**2", FAMILY),
    ListedCurve(1, "r**2 + s", MODULAR, 27),
    ListedCurve(1, "r**2 + r*s - r - s + 1", MODULAR, 36),
    ListedCurve(1, "r**2 + r*s - s", MODULAR, 49),
    ListedCurve(2, "r", DISCRIMINANT),
    ListedCurve(2, "r**2 + r*s + r + 1", DISCRIMINANT),
    ListedCurve(2, "s", MODULAR, 18),
    ListedCurve(2, "r**2*s + r*s**2 + r*s + 2*s**2 - 2*s + 1", FAMILY),
    ListedCurve(2, "r + 1", MODULAR, 19),
    ListedCurve(2, "s - 1", MODULAR, 20),
    ListedCurve(2, "r*s + 1", MODULAR, 21),
    ListedCurve(2, "r**2*s + 2*r*s + 1", MODULAR, 24),
    ListedCurve(2, "r**2*s + r*s + 1", MODULAR, 32),
    ListedCurve(2, "r**3*s + r**2*s**2 + 3*r**2*s + 4*r*s + r + 2", ELLIPTIC,
                weierstrass=(0, 0, 0, -515, -4494)),
)


def _expr(poly) -> sp.Expr:
    e = sp.sympify(poly, locals={"r": r, "s": s}) if isinstance(poly, str) else sp.sympify(poly)
    return sp.expand(e)


def _same_curve(a: sp.Expr, b: sp.Expr) -> bool:
    q = sp.cancel(a / b)
    return q.is_number and q != 0


def listed_curve(k: int, poly) -> ListedCurve:
    k = _k(k)
    e = _expr(poly)
    for c in LISTED_CURVES:
        if c.k == k and _same_curve(_expr(c.equation), e):
            return c
    raise SurfaceError(f"not a listed curve on Z(13,{k}): {e}")


# ------------------------------------------------------------ parametrisation


class ParametrisationError(ArithmeticError):
    pass


def _rational_singular_points(c: sp.Expr, x: sp.Symbol, y: sp.Symbol) -> list[tuple]:
    G = sp.groebner([c, sp.diff(c, x), sp.diff(c, y)], x, y, order="lex")
    if G.exprs == [1]:
        return []
    sols = sp.solve(G.exprs, [x, y], dict=True)
    return [(d[x], d[y]) for d in sols if x in d and y in d and d[x].is_rational and d[y].is_rational]


def _conic_parameter(q: sp.Expr, u: sp.Symbol) -> tuple[sp.Expr, sp.Expr]:
    """Rational (u(t), w(t)) with w^2 = q(u), for q of degree 1 or 2 in u."""
    P = sp.Poly(q, u)
    if P.degree() == 1:
        a1, a0 = P.all_coeffs()
        return (t ** 2 - a0) / a1, t
    if P.degree() != 2:
        raise ParametrisationError(f"not a conic: w^2 = {q}")
    lc = P.LC()
    root = rational_sqrt(Fraction(int(sp.numer(lc)), int(sp.denom(lc))))
    if root is not None:
        # lines through a point at infinity: w = root*u + t
        uu = sp.solve(sp.expand(q - (sp.Rational(root.numerator, root.denominator) * u + t) ** 2), u)[0]
        return uu, sp.Rational(root.numerator, root.denominator) * uu + t
    for u0 in sorted(range(-60, 61), key=abs):
        val = P.eval(u0)
        w0 = rational_sqrt(Fraction(int(sp.numer(val)), int(sp.denom(val))))
        if w0 is not None:
            w0 = sp.Rational(w0.numerator, w0.denominator)
            sols = [e for e in sp.solve(sp.expand(q - (w0 + t * (u - u0)) ** 2), u) if sp.simplify(e - u0) != 0]
            uu = sp.cancel(sols[0])
            return uu, sp.cancel(w0 + t * (uu - u0))
    raise ParametrisationError(f"no small rational point on w^2 = {q}")


def _terminal(c: sp.Expr, x: sp.Symbol, y: sp.Symbol) -> dict | None:
    """Parametrise c(x, y) = 0 directly when it is linear or quadratic in a variable."""
    for v, w in ((y, x), (x, y)):
        if sp.degree(c, v) == 1:
            a1, a0 = sp.Poly(c, v).all_coeffs()
            return {w: t, v: sp.cancel((-a0 / a1).subs(w, t))}
    for v, w in ((y, x), (x, y)):
        if sp.degree(c, v) != 2:
            continue
        A, B, C = sp.Poly(c, v).all_coeffs()
        const, facs = sp.factor_list(sp.expand(B ** 2 - 4 * A * C))
        sq, q = sp.Integer(1), const
        for f, e in facs:
            sq *= f ** (e // 2)
            q *= f ** (e % 2)
        if sp.degree(q, w) in (1, 2):
            ww, root = _conic_parameter(sp.expand(q), w)
            vv = ((-B + sq * _w) / (2 * A)).subs(w, ww).subs(_w, root)
            return {w: sp.cancel(ww), v: sp.cancel(vv)}
    return None


def _cleared(poly: sp.Expr, rt: sp.Expr, st: sp.Expr, n: int | None = None) -> sp.Poly:
    """b^n e^n poly(a/b, c/e) as a polynomial in t, where n >= the total degree of poly."""
    P = sp.Poly(poly, r, s)
    n = P.total_degree() if n is None else n
    a, b = (sp.Poly(x, t, domain="QQ") for x in sp.fraction(sp.cancel(rt)))
    c, e = (sp.Poly(x, t, domain="QQ") for x in sp.fraction(sp.cancel(st)))
    one = sp.Poly(1, t, domain="QQ")
    pows = {x: [one] for x in ("a", "b", "c", "e")}
    for _ in range(n):
        for key, base in (("a", a), ("b", b), ("c", c), ("e", e)):
            pows[key].append(pows[key][-1] * base)
    acc = sp.Poly(0, t, domain="QQ")
    for (i, j), coef in P.terms():
        acc += pows["a"][i] * pows["b"][n - i] * pows["c"][j] * pows["e"][n - j] * coef
    return acc


@lru_cache(maxsize=None)
def rational_parametrisation(poly_text: str, max_steps: int = 6) -> tuple[sp.Expr, sp.Expr]:
    """(r(t), s(t)) parametrising the rational plane curve poly(r, s) = 0."""
    c = _expr(poly_text).subs({r: _u, s: _v}, simultaneous=True)
    centres = []
    for _ in range(max_steps):
        sol = _terminal(c, _u, _v)
        if sol is not None:
            ut, vt = sol[_u], sol[_v]
            # undo the projections: the previous v was b + v * (u - a)
            for a, b in reversed(centres):
                vt = sp.cancel(b + vt * (ut - a))
            if _cleared(_expr(poly_text), ut, vt).is_zero is False or (not ut.has(t) and not vt.has(t)):
                raise ParametrisationError(f"parametrisation check failed for {poly_text}")
            return ut, vt
        pts = _rational_singular_points(c, _u, _v)
        if not pts:
            raise ParametrisationError(f"no rational singular point on {c}")
        a, b = pts[0]
        num = sp.Poly(sp.numer(sp.together(c.subs(_v, b + _m * (_u - a)))), _u)
        while num.eval(a) == 0:
            num = sp.Poly(sp.quo(num.as_expr(), _u - a, _u), _u)
        c = sp.expand(num.as_expr().subs(_m, _v))
        centres.append((a, b))
    raise ParametrisationError(f"no parametrisation of {poly_text} within {max_steps} projections")


# ------------------------------------------------------------ the cover


@dataclass
class CoverRestriction:
    """F_k restricted to a parametrised curve: const * square * prod(odd factors)."""

    constant: sp.Rational
    odd_factors: list[sp.Expr]

    @property
    def squarefree_degree(self) -> int:
        return sum(sp.degree(f, t) for f in self.odd_factors)

    @property
    def split(self) -> bool:
        """The preimage is two curves defined over Q."""
        if self.squarefree_degree:
            return False
        c = Fraction(int(sp.numer(self.constant)), int(sp.denom(self.constant)))
        return rational_sqrt(c) is not None

    @property
    def genus(self) -> int:
        d = self.squarefree_degree
        return 0 if d <= 2 else (d + d % 2) // 2 - 1

    def jacobian(self) -> EllipticCurveQ:
        """Minimal model of the Jacobian of y^2 = const * prod(odd factors), of degree 3 or 4."""
        if self.squarefree_degree not in (3, 4):
            raise ValueError("the cover is not of genus one")
        g = sp.Poly(sp.expand(self.constant * sp.prod(self.odd_factors)), t)
        a, b, c, d, e = (Fraction(str(g.coeff_monomial(t ** i))) for i in (4, 3, 2, 1, 0))
        I = 12 * a * e - 3 * b * d + c * c
        J = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c ** 3
        return tate_conductor(EllipticCurveQ.short(-27 * I, -27 * J)).minimal


def cover_restriction(k: int, rt: sp.Expr, st: sp.Expr) -> CoverRestriction:
    """Squarefree decomposition of F_k(r(t), s(t)).

    Clearing denominators multiplies by (b e)^n with n = deg F_k even, which
    does not change the squarefree part.
    """
    model = surface_model(_k(k))
    const, facs = _cleared(model.F_affine(), rt, st, model.degree).factor_list()
    odd = [f.as_expr() for f, m in facs if m % 2 and f.degree() > 0]
    return CoverRestriction(sp.Rational(const), odd)


# ------------------------------------------------------------ sampling


def _small_rationals():
    for h in count(1):
        for a in range(-h, h + 1):
            for b in range(1, h + 1):
                if max(abs(a), b) == h and sp.igcd(a, b) == 1:
                    yield sp.Rational(a, b)


def sample_points(poly, rt: sp.Expr, st: sp.Expr, n: int = 20, max_tries: int = 400) -> tuple[list, list]:
    """(smooth points, singular points) of the curve from rational parameter values."""
    c = _expr(poly)
    grad = (sp.diff(c, r), sp.diff(c, s))
    smooth, singular, seen = [], [], set()
    for i, t0 in enumerate(_small_rationals()):
        if len(smooth) >= n or i >= max_tries:
            break
        pt = (rt.subs(t, t0), st.subs(t, t0))
        if not all(v.is_rational for v in pt) or pt in seen:
            continue
        seen.add(pt)
        sub = {r: pt[0], s: pt[1]}
        if c.subs(sub) != 0:
            raise ParametrisationError(f"parametrisation left the curve at t = {t0}")
        (singular if all(g.subs(sub) == 0 for g in grad) else smooth).append(pt)
    return smooth, singular


# ------------------------------------------------------------ verdict


@dataclass
class GenusCurveVerdict:
    k: int
    equation: str
    role: str
    passed: bool
    divides_discriminant: bool
    parametrisation: tuple[str, str] | None
    cover_split: bool | None
    cover_genus: int | None
    squarefree_degree: int | None
    jacobian: list[str] | None
    expected_jacobian: list[str] | None
    samples: int
    singular_samples: int
    square_samples: int
    on_discriminant: int
    sampling_ok: bool
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return dict(self.__dict__)


def divides_discriminant(k: int, poly) -> bool:
    """Every irreducible factor of poly is one of the factors of D_k."""
    D = surface_model(_k(k)).D
    dfacs = [f.as_base_exp()[0] for f in sp.Mul.make_args(D) if f.free_symbols]
    _, facs = sp.factor_list(_expr(poly))
    return all(any(_same_curve(f, g) for g in dfacs) for f, _ in facs)


def _is_square(v: sp.Rational) -> bool:
    return rational_sqrt(Fraction(int(v.p), int(v.q))) is not None


def genus_curve_check(k: int, poly, n_samples: int = 20) -> GenusCurveVerdict:
    """Classify a listed curve's preimage on the double cover and check it against its role."""
    lc = listed_curve(k, poly)
    notes: list[str] = []
    model = surface_model(lc.k)
    F = model.F_affine()
    divides = divides_discriminant(lc.k, lc.equation)
    try:
        rt, st = rational_parametrisation(lc.equation)
    except ParametrisationError as exc:
        rt = st = None
        notes.append(f"no parametrisation: {exc}")
    restriction = cover_restriction(lc.k, rt, st) if rt is not None else None
    smooth, singular = sample_points(lc.equation, rt, st, n_samples) if rt is not None else ([], [])
    sampling_ok = len(smooth) >= n_samples
    if not sampling_ok:
        notes.append(f"sampling failure: {len(smooth)} smooth points found, {n_samples} requested")
    values = [F.subs({r: a, s: b}) for a, b in smooth]
    squares = sum(1 for v in values if _is_square(sp.Rational(v)))
    on_D = sum(1 for a, b in smooth if model.D.subs({r: a, s: b}) == 0)

    jac = expected = None
    if restriction is not None and restriction.genus == 1:
        jac = [str(a) for a in restriction.jacobian().ainvs]
    if lc.role == DISCRIMINANT:
        passed = divides and on_D == len(smooth)
    elif lc.role == FAMILY:
        passed = (restriction is not None and restriction.split and squares == len(smooth) > 0)
        if not divides and squares == len(smooth):
            notes.append("F_k is a square at every sampled smooth point")
    elif lc.role == MODULAR:
        if lc.level in GENUS_ZERO_LEVELS:
            passed = restriction is not None and restriction.genus == 0 and not restriction.split
        else:
            expected = [str(a) for a in tate_conductor(EllipticCurveQ.from_list(X0_MODELS[lc.level])).minimal.ainvs]
            passed = jac == expected
    else:
        expected = [str(a) for a in tate_conductor(EllipticCurveQ.from_list(lc.weierstrass)).minimal.ainvs]
        passed = jac == expected
        notes.append(f"{squares} of {len(smooth)} sampled plane points lift to rational points of the cover")
    return GenusCurveVerdict(
        k=lc.k, equation=lc.equation, role=lc.role, passed=bool(passed), divides_discriminant=divides,
        parametrisation=(str(rt), str(st)) if rt is not None else None,
        cover_split=restriction.split if restriction else None,
        cover_genus=restriction.genus if restriction else None,
        squarefree_degree=restriction.squarefree_degree if restriction else None,
        jacobian=jac, expected_jacobian=expected, samples=len(smooth), singular_samples=len(singular),
        square_samples=squares, on_discriminant=on_D, sampling_ok=sampling_ok, notes=notes)


def check_listed_curves() -> list[GenusCurveVerdict]:
    return [genus_curve_check(c.k, c.equation) for c in LISTED_CURVES]
