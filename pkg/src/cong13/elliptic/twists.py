"""Choosing the quadratic twist of smallest conductor.

The twists searched are E^d for squarefree d supported on the primes dividing
6 * Delta_min.  The conductor of E^d factors into local exponents: at an odd
prime p the exponent depends only on whether p divides d, and at 2 it depends
only on the class of d in Q_2^* / (Q_2^*)^2.  The search is therefore a small
dynamic program over the residue of the odd part of d modulo 8, rather than an
enumeration of all 2^k subsets.
"""
from __future__ import annotations

from sympy import factorint

from .curve import EllipticCurveQ, quadratic_twist
from .tate import tate_conductor, tate_local

# representatives of Q_2^* / squares: (odd unit part mod 8, power of 2)
_TWO_ADIC_REPS = {(1, 0): 1, (7, 0): -1, (3, 0): 3, (5, 0): -3,
                  (1, 1): 2, (7, 1): -2, (3, 1): 6, (5, 1): -6}


def twist_primes(E: EllipticCurveQ) -> list[int]:
    """The primes dividing 6 * Delta_min."""
    dmin = tate_conductor(E).minimal_discriminant
    return sorted(set(factorint(abs(6 * dmin))) | {2, 3})


def _local_exponent(E: EllipticCurveQ, p: int) -> int:
    return tate_local(E.integral_model(), p)[0].conductor_exponent


def minimal_conductor_twist(E: EllipticCurveQ) -> tuple[int, EllipticCurveQ]:
    """(d, minimal model of E^d) with the least conductor; ties go to least |d|, then positive d."""
    base = tate_conductor(E)
    primes = twist_primes(E)
    odd = [p for p in primes if p != 2]

    def f_out(p: int) -> int:
        ld = base.local.get(p)
        return ld.conductor_exponent if ld else 0

    # best[r] = (odd conductor part, odd |d|) over subsets whose product is r mod 8
    best: dict[int, tuple[int, int]] = {1: (1, 1)}
    for p in odd:
        star = p if p % 4 == 1 else -p
        f_in = _local_exponent(quadratic_twist(E, star), p)
        nxt: dict[int, tuple[int, int]] = {}
        for r, (n, d) in best.items():
            for key, r2 in (((n * p ** f_out(p), d), r), ((n * p ** f_in, d * p), r * p % 8)):
                if r2 not in nxt or key < nxt[r2]:
                    nxt[r2] = key
        best = nxt
    two = {cls: _local_exponent(quadratic_twist(E, rep), 2) for cls, rep in _TWO_ADIC_REPS.items()}
    choice = None
    for r, (n, dodd) in best.items():
        for sign in (1, -1):
            unit = r * sign % 8
            for e in (0, 1):
                key = (n * 2 ** two[(unit, e)], dodd * 2 ** e, sign < 0)
                if choice is None or key < choice[0]:
                    choice = (key, sign * dodd * 2 ** e)
    d = choice[1]
    T = tate_conductor(quadratic_twist(E, d))
    if T.conductor != choice[0][0]:
        raise ArithmeticError("local conductor exponents do not assemble to the global conductor")
    return d, T.minimal
