"""The linear isomorphism X_E(13,1) -> X_F(13,2) attached to a 2-isogeny E -> F.

E: y^2 = x^3 + a x + b, theta a root of x^3 + a x + b, and
F: y^2 = x^3 + A x + B with A = -15 theta^2 - 4a, B = 14 a theta + 22 b.
Entries may be rationals, elements of Q[theta]/(theta^3 + a theta + b) or
sympy expressions.
"""
from __future__ import annotations

from fractions import Fraction

from ..exactalg.poly import SparsePoly
from .spaces import FormSpace


class SingularTransport(ArithmeticError):
    pass


def isogenous_curve(a, b, theta):
    return (-15 * theta ** 2 - 4 * a, 14 * a * theta + 22 * b)


def transport_matrix(a, b, th) -> list[list]:
    """Rows give x'_1..x'_7 as linear combinations of x_1..x_7."""
    z = 0 * th
    return [
        [14 * th ** 2 + 8 * a, 32 * th ** 2, -(3 * a * th - 25 * b), 38 * a * th - 18 * b,
         -(18 * a * th ** 2 + 30 * b * th + 16 * a ** 2), -(11 * a * th ** 2 - 3 * b * th + 24 * a ** 2),
         144 * b * th ** 2 - 44 * a ** 2 * th + 132 * a * b],
        [z, 14 * th ** 2 + 8 * a, 3 * a * th + 7 * b, 11 * a * th + 15 * b,
         -(17 * a * th ** 2 - 9 * b * th + 8 * a ** 2), -(5 * a * th ** 2 - 21 * b * th + 8 * a ** 2),
         144 * b * th ** 2 + 10 * a ** 2 * th + 66 * a * b],
        [8 * th, 8 * th, 8 * th ** 2, 30 * th ** 2 + 24 * a, 10 * a * th - 6 * b, -(8 * a * th + 24 * b),
         12 * a * th ** 2 - 108 * b * th],
        [4 * th, 8 * th, 5 * th ** 2 + 4 * a, z, z, -(5 * a * th - 3 * b), z],
        [-4 * th, -12 * th, z, 3 * th ** 2 - 4 * a, a * th + 9 * b, z, 6 * a * th ** 2 - 18 * b * th + 16 * a ** 2],
        [-4 + z, -12 + z, z, 6 * th, -(6 * th ** 2 + 4 * a), z, -12 * a * th],
        [2 + z, 4 + z, th, z, z, 3 * th ** 2 + 2 * a, z],
    ]


def expected_determinant(a, theta):
    c = 3 * theta
    d = 3 * theta ** 2 + a
    return -(2 ** 10) * 3 ** 2 * d ** 3 * (c ** 2 - 4 * d) ** 5


def symbolic_determinant_check() -> bool:
    """det(M) = -2^10 3^2 d^3 (c^2 - 4d)^5 modulo theta^3 + a theta + b, as polynomials in a, theta."""
    import sympy

    a, th = sympy.symbols("a theta")
    b = -th ** 3 - a * th  # eliminates b using the cubic relation
    M = sympy.Matrix(transport_matrix(a, b, th))
    det = sympy.expand(M.det(method="berkowitz"))
    return sympy.expand(det - expected_determinant(a, th)) == 0


def rational_determinant(a, b, theta) -> Fraction:
    from ..exactalg.linalg import determinant

    return Fraction(determinant([[Fraction(x) for x in row] for row in transport_matrix(a, b, theta)]))


def pullback_space(space: FormSpace, M) -> FormSpace:
    """span{ g(M x) : g in space }."""
    M = [[Fraction(x) for x in row] for row in M]
    return FormSpace.from_forms([g.linear_substitute(M) for g in space.forms()], space.degree)


def two_isogeny_transport(a, b, theta) -> list[list[Fraction]]:
    """The 7x7 substitution matrix for a rational root theta; raises on singular data."""
    a, b, theta = Fraction(a), Fraction(b), Fraction(theta)
    if theta ** 3 + a * theta + b != 0:
        raise ValueError("theta is not a root of x^3 + a x + b")
    d = 3 * theta ** 2 + a
    if d == 0 or 9 * theta ** 2 - 4 * d == 0:
        raise SingularTransport("d = 0 or c^2 = 4d: the transformation is singular")
    return [[Fraction(x) for x in row] for row in transport_matrix(a, b, theta)]


def rational_roots_of_cubic(a, b) -> list[Fraction]:
    from ..exactalg.upoly import rational_roots

    return sorted(set(rational_roots([Fraction(b), Fraction(a), Fraction(0), Fraction(1)])))
