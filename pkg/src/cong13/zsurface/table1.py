"""Copies of X_0(m) on the covers: the 25 polynomial and epsilon-series identities."""
from __future__ import annotations

from dataclasses import dataclass

import sympy as sp

from .surface import F_poly, r, s, z

t, eps = sp.symbols("t epsilon")


@dataclass(frozen=True)
class Table1Row:
    m: int
    genus: int
    k: int
    point: tuple[str, str, str]
    rhs: str
    order: int | None  # power of epsilon of the leading term; None for exact identities


TABLE1: tuple[Table1Row, ...] = (
    Table1Row(2, 0, 2, ("4", "-3 - e**2 + t*e**4", "-2 + 2*e"), "2**18*(4*t + 1)", 4),
    Table1Row(3, 0, 1, ("1", "1 + e + t*e**3", "2 + e"), "16*(54*t + 1)", 4),
    Table1Row(4, 0, 1, ("1", "t*e**2", "-1 + e"), "4*(32*t + 1)", 2),
    Table1Row(5, 0, 2, ("t*e**2", "1", "-1 + e"), "-(16*t**2 + 44*t - 1)", 4),
    Table1Row(6, 0, 2, ("e**3", "t", "e**2"), "t**6*(t**2 + 34*t + 1)", 18),
    Table1Row(7, 0, 2, ("1", "-1 + t*e**2 + t*e**3", "-1 + t*e**2"), "t**4*(t + 1)*(t - 27)", 12),
    Table1Row(8, 0, 2, ("e**2 - e**3 - t*e**4", "-1", "-e"), "t**2 + 28*t + 68", 14),
    Table1Row(9, 0, 1, ("e", "1 - e**2 + t*e**3", "1"), "t**2 - 18*t - 27", 6),
    Table1Row(10, 0, 1, ("0", "t", "1"), "t**4*(t - 1)**2*(t**2 + 16*t - 16)", None),
    Table1Row(11, 1, 2, ("1", "-e**3 + e**4 + t*e**5", "e"), "(t + 2)*(t**3 - 14*t**2 - 12*t - 4)", 20),
    Table1Row(12, 0, 1, ("1", "-1 + t*e", "e"), "t**2*(t**2 + 14*t + 1)", 4),
    Table1Row(14, 1, 1, ("e", "1", "-e**2 + t*e**3"), "t**4 + 14*t**3 + 19*t**2 + 14*t + 1", 12),
    Table1Row(15, 1, 2, ("1", "-1 + t*e", "e"), "(t**2 + t - 1)*(t**2 + 13*t + 11)", 4),
    Table1Row(16, 0, 1, ("1", "e", "1 + t*e"), "4*t**2 + 4*t - 7", 2),
    Table1Row(17, 1, 1, ("t*e", "e**2", "t"), "t**8*(t**4 - 6*t**3 - 27*t**2 - 28*t - 16)", 8),
    Table1Row(18, 0, 2, ("t", "0", "1"), "t**2 + 10*t + 1", None),
    Table1Row(19, 1, 2, ("-1", "t", "1"), "(t - 1)**4*(t - 2)*(t**3 + 10*t**2 + 12*t + 4)", None),
    Table1Row(20, 1, 2, ("t", "1", "1"), "(t + 1)**6*(t**4 + 12*t**3 + 28*t**2 + 32*t + 16)", None),
    Table1Row(21, 1, 2, ("1", "-t**2", "t"), "t**8*(t + 1)**4*(t**4 + 6*t**3 - 17*t**2 + 6*t + 1)", None),
    Table1Row(24, 1, 2, ("t**3 + 2*t**2", "-1", "t**2 + 2*t"),
              "t**10*(t + 1)**6*(t + 2)**6*(t**4 - 4*t**3 - 16*t**2 - 8*t + 4)", None),
    Table1Row(25, 0, 1, ("t", "-t", "1"), "t**4*(t**2 + 4*t - 16)", None),
    Table1Row(27, 1, 1, ("t", "t**2", "-1"), "t**8*(t + 2)*(t**3 - 6*t**2 - 4)", None),
    Table1Row(32, 1, 2, ("t + 1", "-t**3", "t**2 + t"), "t**20*(t + 1)**6*(4*t**4 - 12*t**2 - 16*t - 7)", None),
    Table1Row(36, 1, 1, ("t + 1", "-t**2 - t - 1", "-t**2 - t"),
              "t**12*(t + 1)**4*(4*t**4 + 8*t**3 + 12*t**2 + 8*t + 1)", None),
    Table1Row(49, 1, 1, ("t", "-t**2", "t - 1"),
              "t**8*(t - 2)**2*(t - 1)**4*(t + 1)**2*(t**4 - 6*t**3 + 3*t**2 + 18*t - 19)", None),
)


@dataclass(frozen=True)
class Table1Verdict:
    m: int
    k: int
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"m": self.m, "k": self.k, "passed": self.passed, "detail": self.detail}


def _parse(text: str) -> sp.Expr:
    return sp.sympify(text, locals={"t": t, "e": eps})


def table1_row(m: int) -> Table1Row:
    for row in TABLE1:
        if row.m == m:
            return row
    raise KeyError(f"no Table 1 row for m = {m}")


def table1_check(row: Table1Row | int) -> Table1Verdict:
    """Expand F_k at the row's point in Q[t, epsilon] and compare with the stated leading term."""
    if isinstance(row, int):
        row = table1_row(row)
    x, y, w = (_parse(c) for c in row.point)
    F = F_poly(row.k).as_expr()
    val = sp.Poly(sp.expand(F.subs({r: x, s: y, z: w}, simultaneous=True)), eps, t)
    rhs = sp.expand(_parse(row.rhs))
    if row.order is None:
        ok = sp.expand(val.as_expr() - rhs) == 0
        return Table1Verdict(row.m, row.k, ok, "exact identity" if ok else "identity fails")
    lower = [sp.expand(val.as_expr().coeff(eps, i)) for i in range(row.order)]
    if any(c != 0 for c in lower):
        bad = next(i for i, c in enumerate(lower) if c != 0)
        return Table1Verdict(row.m, row.k, False, f"nonzero coefficient of epsilon^{bad}")
    lead = sp.expand(val.as_expr().coeff(eps, row.order))
    ok = sp.expand(lead - rhs) == 0
    return Table1Verdict(row.m, row.k, ok,
                         f"epsilon^0..{row.order - 1} vanish; leading term {'matches' if ok else 'differs'}")


def check_table1() -> list[Table1Verdict]:
    return [table1_check(row) for row in TABLE1]
