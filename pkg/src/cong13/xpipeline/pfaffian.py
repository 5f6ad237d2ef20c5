"""Recovering the invariant quadric from an alternating 3-form."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exactalg.poly import SparsePoly
from ..repgroup.forms import n_matrix


class MalformedForm(ValueError):
    pass


def pfaffian(M: Sequence[Sequence[SparsePoly]]) -> SparsePoly:
    """Pfaffian of an even-size alternating matrix, by expansion along the first row."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    if n % 2:
        raise ValueError("Pfaffian needs even size")
    if n == 2:
        return M[0][1]
    acc = SparsePoly(M[0][1].vars)
    for j in range(1, n):
        if not M[0][j]:
            continue
        keep = [i for i in range(1, n) if i != j]
        sub = [[M[r][c] for c in keep] for r in keep]
        term = M[0][j] * pfaffian(sub)
        acc = acc + term if j % 2 == 1 else acc - term
    return acc


def principal_pfaffians(N: Sequence[Sequence[SparsePoly]]) -> list[SparsePoly]:
    n = len(N)
    out = []
    for i in range(n):
        keep = [r for r in range(n) if r != i]
        out.append(pfaffian([[N[r][c] for c in keep] for r in keep]))
    return out


def _to_sympy(f: SparsePoly):
    import sympy

    syms = sympy.symbols(list(f.vars))
    expr = 0
    for e, c in f.items():
        term = sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
        for s, k in zip(syms, e):
            if k:
                term *= s ** k
        expr += term
    return expr, syms


def pfaffian_q_recovery(phi: dict[tuple[int, int, int], object], vars: Sequence[str]) -> SparsePoly:
    """GCD of the 6x6 principal Pfaffians of N_ij = (d/dx_i ^ d/dx_j) phi, normalized to content 1."""
    import sympy

    N = n_matrix(phi, vars)
    pf = [p for p in principal_pfaffians(N) if p]
    if not pf:
        raise MalformedForm("all Pfaffians vanish")
    exprs = [_to_sympy(p)[0] for p in pf]
    syms = sympy.symbols(list(vars))
    g = exprs[0]
    for e in exprs[1:]:
        g = sympy.gcd(g, e)
    P = sympy.Poly(g, *syms)
    if P.total_degree() != 2:
        raise MalformedForm(f"GCD has degree {P.total_degree()}, expected 2")
    P = P.primitive()[1]
    if P.LC() < 0:
        P = -P
    return SparsePoly.parse(str(P.as_expr()), tuple(vars))


def recovers(phi, vars, q: SparsePoly) -> bool:
    """Whether the recovered quadric is a scalar multiple of q."""
    r = pfaffian_q_recovery(phi, vars)
    items = list(q.items())
    e0, c0 = items[0]
    lam = Fraction(r.coeff(e0)) / Fraction(c0)
    return lam != 0 and r == q * lam
