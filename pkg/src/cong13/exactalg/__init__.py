"""Exact coefficient domains, sparse polynomials and exact linear algebra."""
from __future__ import annotations

from fractions import Fraction

from . import upoly
from .algebra import BivariateQuotient, UnivariateQuotient, poly_to_upoly, upoly_to_poly
from .linalg import (determinant, in_span, nullspace_basis, nullspace_mod_p, rank, rank_mod_p,
                     rref_mod_p, span_equal)
from .poly import SparsePoly, monomials, pack, poly_from_vector, poly_to_vector, unpack
from .rings import GF, QElem, QuotientRing, ZeroDivisorError, cyclotomic_ring, gauss_sum, legendre
from .upoly import NotASquare

__all__ = [
    "BivariateQuotient", "Fraction", "GF", "NotASquare", "QElem", "QuotientRing", "SparsePoly",
    "UnivariateQuotient", "ZeroDivisorError", "cyclotomic_ring", "determinant", "exact_poly_sqrt",
    "gauss_sum", "in_span", "legendre", "monomials", "nullspace_basis", "nullspace_mod_p", "pack",
    "poly_from_vector", "poly_to_vector", "quotient_reduce", "rank", "rank_mod_p", "ring_inverse",
    "rref_mod_p", "span_equal", "unpack", "upoly",
]


def exact_poly_sqrt(f: SparsePoly) -> SparsePoly:
    """Square root of a univariate polynomial over Q with positive leading coefficient."""
    if f.nvars != 1:
        raise ValueError("exact_poly_sqrt expects a univariate polynomial")
    g = upoly.poly_sqrt(poly_to_upoly(f, 0))
    return upoly_to_poly(g, f.vars)


def quotient_reduce(f, algebra):
    """Canonical normal form of ``f`` in a quotient algebra."""
    if isinstance(algebra, QuotientRing):
        if isinstance(f, QElem):
            return algebra.from_coeffs(f.coeffs())
        return algebra.from_coeffs(poly_to_upoly(f, 0) if isinstance(f, SparsePoly) else f)
    return algebra.reduce(f)


def ring_inverse(x: QElem) -> tuple[QElem, tuple[list, list]]:
    """Inverse of a unit together with the Bezout certificate (u, v): u*x + v*m = 1."""
    return x.inverse_with_certificate()
