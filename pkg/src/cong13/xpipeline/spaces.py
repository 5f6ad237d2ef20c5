"""Linear algebra on spaces of forms in seven variables.

A space of degree-d forms is stored as a list of rational coefficient
vectors on the lex-ordered monomial basis ``monomials(7, d)``.  All stages
of the point-to-cubics pipeline live here.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Sequence

from ..exactalg.linalg import nullspace_basis, rank, row_space_basis
from ..exactalg.poly import SparsePoly, monomials, poly_from_vector, poly_to_vector

NVARS = 7
XVARS = tuple(f"x{i}" for i in range(1, NVARS + 1))


class PipelineError(ArithmeticError):
    """A stage produced a space of unexpected dimension."""

    def __init__(self, stage: str, expected: int, got: int):
        super().__init__(f"{stage}: expected dimension {expected}, got {got}")
        self.stage = stage
        self.expected = expected
        self.got = got


@lru_cache(maxsize=None)
def basis(d: int) -> tuple[tuple[int, ...], ...]:
    return tuple(monomials(NVARS, d))


@lru_cache(maxsize=None)
def index(d: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(basis(d))}


@dataclass
class FormSpace:
    degree: int
    vectors: list[list[Fraction]]
    vars: tuple[str, ...] = XVARS

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def forms(self) -> list[SparsePoly]:
        return [poly_from_vector(self.vars, basis(self.degree), v) for v in self.vectors]

    @classmethod
    def from_forms(cls, forms: Sequence[SparsePoly], degree: int | None = None) -> "FormSpace":
        forms = list(forms)
        d = degree if degree is not None else forms[0].degree()
        vecs = [[Fraction(c) for c in poly_to_vector(f, basis(d))] for f in forms]
        return cls(d, row_space_basis(vecs), tuple(forms[0].vars))

    def same_span(self, other: "FormSpace") -> bool:
        if self.degree != other.degree:
            return False
        if not self.vectors or not other.vectors:
            return self.dim == other.dim
        r = rank(self.vectors + other.vectors)
        return r == self.dim == other.dim

    def contains(self, f: SparsePoly) -> bool:
        v = [Fraction(c) for c in poly_to_vector(f, basis(self.degree))]
        if not any(v):
            return True
        return rank(self.vectors + [v]) == self.dim


def _kernel(rows: list[list], ncols: int) -> list[list[Fraction]]:
    rows = [r for r in rows if any(r)]
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    method = "modular" if len(rows) * ncols > 20000 else "auto"
    return nullspace_basis(rows, ncols, method=method)


def _expect(stage: str, space: FormSpace, expected: int | None) -> FormSpace:
    if expected is not None and space.dim != expected:
        raise PipelineError(stage, expected, space.dim)
    return space


# ------------------------------------------------------------------ stages


def quadrics_through(scheme, expected: int | None = 14) -> FormSpace:
    """Quadrics vanishing on a point scheme.

    ``scheme.quadric_rows()`` supplies rational linear conditions on the 28
    quadric coefficients (one row per point and per coordinate of the value
    in the coefficient algebra).
    """
    return _expect("quadrics_through", FormSpace(2, _kernel(scheme.quadric_rows(), len(basis(2)))), expected)


@lru_cache(maxsize=None)
def _multinomial_weights(d: int) -> tuple[int, ...]:
    return tuple(prod(factorial(e) for e in a) for a in basis(d))


def apolar_complement(U: FormSpace, expected: int | None = 14) -> FormSpace:
    """Forms of the same degree annihilated by f(d/dx) for every f in U."""
    w = _multinomial_weights(U.degree)
    rows = [[c * wi for c, wi in zip(v, w)] for v in U.vectors]
    return _expect("apolar_complement", FormSpace(U.degree, _kernel(rows, len(basis(U.degree)))), expected)


def _times_variable_matrix(d: int) -> list[list[list[int]]]:
    """mult[i][target][source]: multiplication by x_i from degree d to d+1."""
    src, tgt = basis(d), index(d + 1)
    out = []
    for i in range(NVARS):
        m = [[0] * len(src) for _ in range(len(tgt))]
        for j, e in enumerate(src):
            e2 = list(e)
            e2[i] += 1
            m[tgt[tuple(e2)]][j] = 1
        out.append(m)
    return out


def linear_syzygies(Up: FormSpace) -> list[list[list[Fraction]]]:
    """Solutions (f_1, ..., f_7) in Up^7 of sum x_i f_i = 0, each f_i as a coefficient vector."""
    d = Up.degree
    k = Up.dim
    nb = len(basis(d))
    mult = _times_variable_matrix(d)
    nt = len(basis(d + 1))
    # unknown c[i][j]: f_i = sum_j c[i][j] Up[j]
    images = []
    for i in range(NVARS):
        for j in range(k):
            v = Up.vectors[j]
            col = [sum(mult[i][r][s] * v[s] for s in range(nb) if mult[i][r][s]) for r in range(nt)]
            images.append(col)
    rows = [[images[c][r] for c in range(len(images))] for r in range(nt)]
    sols = _kernel(rows, len(images))
    out = []
    for sol in sols:
        fs = []
        for i in range(NVARS):
            vec = [Fraction(0)] * nb
            for j in range(k):
                c = sol[i * k + j]
                if c:
                    vec = [a + c * b for a, b in zip(vec, Up.vectors[j])]
            fs.append(vec)
        out.append(fs)
    return out


def syzygy_support_span(Up: FormSpace, expected: int | None = 13) -> FormSpace:
    """Span of every component of every linear syzygy among forms in Up."""
    comps = [f for syz in linear_syzygies(Up) for f in syz if any(f)]
    vecs = row_space_basis(comps) if comps else []
    return _expect("syzygy_support_span", FormSpace(Up.degree, vecs), expected)


@lru_cache(maxsize=None)
def _partial_matrices(d: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """der[i][target][source]: d/dx_i from degree d to degree d-1."""
    src, tgt = basis(d), index(d - 1)
    out = []
    for i in range(NVARS):
        m = [[0] * len(src) for _ in range(len(tgt))]
        for j, e in enumerate(src):
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                m[tgt[tuple(e2)]][j] = e[i]
        out.append(tuple(tuple(r) for r in m))
    return tuple(out)


def cubics_from_partials(V: FormSpace, expected: int | None = 7) -> FormSpace:
    """Forms of degree deg(V)+1 all of whose first partials lie in V."""
    d = V.degree + 1
    ann = _kernel([list(v) for v in V.vectors], len(basis(V.degree))) if V.vectors else \
        [[Fraction(int(i == j)) for j in range(len(basis(V.degree)))] for i in range(len(basis(V.degree)))]
    rows = []
    for D in _partial_matrices(d):
        for phi in ann:
            rows.append([sum(phi[r] * D[r][c] for r in range(len(phi)) if phi[r] and D[r][c])
                         for c in range(len(basis(d)))])
    return _expect("cubics_from_partials", FormSpace(d, _kernel(rows, len(basis(d)))), expected)


# ------------------------------------------------------------------ apolar quartic


def bracket_operator(f: SparsePoly, q: SparsePoly) -> list[list[SparsePoly]]:
    """B = H(q)^-1 H(f) H(q)^-1, a symmetric 7x7 matrix of forms.

    For every form g, <f, g> = sum_{k,l} B_kl d^2 g / dx_k dx_l.
    """
    from ..repgroup.forms import hessian_inverse

    P = hessian_inverse(q)
    Hf = f.hessian()
    n = len(Hf)
    zero = SparsePoly(f.vars)
    left = [[zero] * n for _ in range(n)]  # P Hf
    for k in range(n):
        for j in range(n):
            acc = zero
            for i in range(n):
                if P[k][i] and Hf[i][j]:
                    acc = acc + Hf[i][j] * P[k][i]
            left[k][j] = acc
    B = [[zero] * n for _ in range(n)]
    for k in range(n):
        for l in range(n):
            acc = zero
            for j in range(n):
                if P[j][l] and left[k][j]:
                    acc = acc + left[k][j] * P[j][l]
            B[k][l] = acc
    return B


def bracket_rows(fs: Sequence[SparsePoly], q: SparsePoly, d: int) -> list[list[Fraction]]:
    """Linear conditions on degree-d forms g expressing <f, g> = 0 for each f."""
    from ..exactalg.poly import pack

    src = basis(d)
    out = []
    for f in fs:
        B = bracket_operator(f, q)
        rows: dict[int, list[Fraction]] = {}
        for col, e in enumerate(src):
            for k in range(NVARS):
                if not e[k]:
                    continue
                for l in range(NVARS):
                    Bkl = B[k][l]
                    if not Bkl:
                        continue
                    e2 = list(e)
                    c = e2[k]
                    e2[k] -= 1
                    c *= e2[l]
                    if not c:
                        continue
                    e2[l] -= 1
                    shift = pack(e2)
                    for key, coef in Bkl.terms.items():
                        r = rows.get(key + shift)
                        if r is None:
                            r = rows[key + shift] = [Fraction(0)] * len(src)
                        r[col] += c * coef
        out.extend(rows.values())
    return out


def bracket(f: SparsePoly, g: SparsePoly, q: SparsePoly) -> SparsePoly:
    """<f, g> = trace(H(f) H(q)^-1 H(g) H(q)^-1)."""
    B = bracket_operator(f, q)
    acc = SparsePoly(f.vars)
    for k in range(NVARS):
        for l in range(NVARS):
            if B[k][l]:
                d2 = g.diff(k).diff(l)
                if d2:
                    acc = acc + B[k][l] * d2
    return acc


def apolar_cubics(T: SparsePoly, q: SparsePoly, expected: int | None = 7) -> FormSpace:
    """Cubic forms f with <f, T> = 0."""
    ker = _kernel(bracket_rows([T], q, 3), len(basis(3)))
    return _expect("apolar_cubics", FormSpace(3, ker, tuple(T.vars)), expected)


def unique_apolar_quartic(W: FormSpace, q: SparsePoly) -> SparsePoly:
    """The quartic T, unique up to scalars, with <f, T> = 0 for every f in W."""
    if W.dim != 7:
        raise PipelineError("unique_apolar_quartic (input)", 7, W.dim)
    ker = _kernel(bracket_rows(W.forms(), q, W.degree + 1), len(basis(W.degree + 1)))
    if len(ker) != 1:
        raise PipelineError("unique_apolar_quartic", 1, len(ker))
    return poly_from_vector(W.vars, basis(W.degree + 1), ker[0])
