"""Sparse multivariate polynomials with exact coefficients.

Exponent vectors are packed into a single Python integer (16 bits per
variable) so that multiplying monomials is one integer addition.  The
coefficient type is anything that supports ``+``, ``-``, ``*`` and
comparison with zero: ``int``, ``Fraction``, quotient-ring elements,
prime-field elements.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

_BITS = 16
_MASK = (1 << _BITS) - 1


def pack(exp: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exp):
        if e < 0 or e > _MASK:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (_BITS * i)
    return key


def unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * i)) & _MASK for i in range(n))


def _total_degree(key: int) -> int:
    d = 0
    while key:
        d += key & _MASK
        key >>= _BITS
    return d


class SparsePoly:
    """Polynomial in the ordered variables ``vars``.

    ``terms`` maps packed exponent keys to nonzero coefficients.  Instances
    are treated as immutable once built.
    """

    __slots__ = ("vars", "terms", "weights")

    def __init__(self, vars: Sequence[str], terms: Mapping[int, object] | None = None,
                 weights: Sequence[int] | None = None, _clean: bool = False):
        self.vars = tuple(vars)
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms  # type: ignore[assignment]
        else:
            self.terms = {k: c for k, c in terms.items() if c != 0}
        self.weights = tuple(weights) if weights is not None else None

    # ------------------------------------------------------------------ construction
    @classmethod
    def zero(cls, vars: Sequence[str]) -> "SparsePoly":
        return cls(vars)

    @classmethod
    def const(cls, vars: Sequence[str], c) -> "SparsePoly":
        return cls(vars, {0: c})

    @classmethod
    def var(cls, vars: Sequence[str], name: str | int, coeff=1) -> "SparsePoly":
        i = name if isinstance(name, int) else list(vars).index(name)
        return cls(vars, {1 << (_BITS * i): coeff})

    @classmethod
    def gens(cls, vars: Sequence[str]) -> list["SparsePoly"]:
        return [cls.var(vars, i) for i in range(len(vars))]

    @classmethod
    def monomial(cls, vars: Sequence[str], exp: Sequence[int], coeff=1) -> "SparsePoly":
        return cls(vars, {pack(exp): coeff})

    @classmethod
    def from_dict(cls, vars: Sequence[str], d: Mapping[tuple, object]) -> "SparsePoly":
        out: dict[int, object] = {}
        for e, c in d.items():
            k = pack(e)
            out[k] = out.get(k, 0) + c
        return cls(vars, out)

    @classmethod
    def parse(cls, text: str, vars: Sequence[str]) -> "SparsePoly":
        """Parse a polynomial written in ordinary notation (``^`` allowed).

        Coefficients must be rational; the text may only mention ``vars``.
        """
        import sympy

        syms = sympy.symbols(list(vars))
        local = {str(s): s for s in syms}
        expr = sympy.sympify(text.replace("^", "**"), locals=local)
        P = sympy.Poly(sympy.expand(expr), *syms, domain="QQ")
        out = {}
        for exp, c in P.terms():
            q = Fraction(int(c.p), int(c.q))
            out[pack(exp)] = q.numerator if q.denominator == 1 else q
        return cls(vars, out)

    # ------------------------------------------------------------------ basic access
    @property
    def nvars(self) -> int:
        return len(self.vars)

    def items(self) -> Iterable[tuple[tuple[int, ...], object]]:
        n = len(self.vars)
        for k in self.sorted_keys():
            yield unpack(k, n), self.terms[k]

    def sorted_keys(self) -> list[int]:
        """Keys in graded-lex order, largest first."""
        n = len(self.vars)
        return sorted(self.terms, key=lambda k: (_total_degree(k), unpack(k, n)), reverse=True)

    def coeff(self, exp: Sequence[int]):
        return self.terms.get(pack(exp), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        return max((_total_degree(k) for k in self.terms), default=-1)

    def degree_in(self, var: str | int) -> int:
        i = var if isinstance(var, int) else self.vars.index(var)
        return max(((k >> (_BITS * i)) & _MASK for k in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({_total_degree(k) for k in self.terms}) <= 1

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        n = len(self.vars)
        return {sum(w * e for w, e in zip(weights, unpack(k, n))) for k in self.terms}

    # ------------------------------------------------------------------ arithmetic
    def _check(self, other: "SparsePoly") -> None:
        if other.vars != self.vars:
            raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            self._check(other)
            return other
        return SparsePoly(self.vars, {0: other})

    def __add__(self, other) -> "SparsePoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            if v is None:
                out[k] = c
            else:
                v = v + c
                if v == 0:
                    del out[k]
                else:
                    out[k] = v
        return SparsePoly(self.vars, out, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly(self.vars, {k: -c for k, c in self.terms.items()}, _clean=True)

    def __sub__(self, other) -> "SparsePoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SparsePoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            if other == 0:
                return SparsePoly(self.vars)
            return SparsePoly(self.vars, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, object] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                v = get(k)
                out[k] = ca * cb if v is None else v + ca * cb
        return SparsePoly(self.vars, out)

    def __rmul__(self, other) -> "SparsePoly":
        return self * other

    def __pow__(self, n: int) -> "SparsePoly":
        if n < 0:
            raise ValueError("negative power")
        result = SparsePoly(self.vars, {0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self.vars == other.vars and (self - other).is_zero()
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def scale(self, c) -> "SparsePoly":
        return self * c

    def map_coeffs(self, fn: Callable) -> "SparsePoly":
        return SparsePoly(self.vars, {k: fn(c) for k, c in self.terms.items()})

    # ------------------------------------------------------------------ calculus and substitution
    def diff(self, var: str | int) -> "SparsePoly":
        i = var if isinstance(var, int) else self.vars.index(var)
        shift = _BITS * i
        unit = 1 << shift
        out = {}
        for k, c in self.terms.items():
            e = (k >> shift) & _MASK
            if e:
                out[k - unit] = c * e
        return SparsePoly(self.vars, out, _clean=True)

    def gradient(self) -> list["SparsePoly"]:
        return [self.diff(i) for i in range(len(self.vars))]

    def hessian(self) -> list[list["SparsePoly"]]:
        g = self.gradient()
        return [[gi.diff(j) for j in range(len(self.vars))] for gi in g]

    def evaluate(self, point: Sequence, one=1):
        """Evaluate at ``point``; entries may be any ring elements."""
        n = len(self.vars)
        if len(point) != n:
            raise ValueError("point has wrong length")
        powers: list[dict[int, object]] = [dict() for _ in range(n)]

        def pw(i: int, e: int):
            cache = powers[i]
            v = cache.get(e)
            if v is None:
                v = point[i] ** e if e > 1 else point[i]
                cache[e] = v
            return v

        total = None
        for k, c in self.terms.items():
            term = c
            kk, i = k, 0
            while kk:
                e = kk & _MASK
                if e:
                    term = term * pw(i, e)
                kk >>= _BITS
                i += 1
            total = term if total is None else total + term
        if total is None:
            return 0 * one
        return total

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return self.evaluate(point)

    def substitute(self, images: Sequence["SparsePoly"]) -> "SparsePoly":
        """Compose: replace variable i by ``images[i]`` (a common target ring)."""
        if len(images) != len(self.vars):
            raise ValueError("need one image per variable")
        tvars = images[0].vars
        n = len(self.vars)
        cache: dict[tuple[int, int], SparsePoly] = {}

        def pw(i: int, e: int) -> SparsePoly:
            key = (i, e)
            v = cache.get(key)
            if v is None:
                if e == 1:
                    v = images[i]
                else:
                    v = pw(i, e // 2) * pw(i, e - e // 2)
                cache[key] = v
            return v

        acc: dict[int, object] = {}
        for k, c in self.terms.items():
            exp = unpack(k, n)
            term: SparsePoly | None = None
            for i, e in enumerate(exp):
                if e:
                    term = pw(i, e) if term is None else term * pw(i, e)
            if term is None:
                acc[0] = acc.get(0, 0) + c
                continue
            for kk, cc in term.terms.items():
                v = acc.get(kk)
                acc[kk] = cc * c if v is None else v + cc * c
        return SparsePoly(tvars, acc)

    def linear_substitute(self, matrix: Sequence[Sequence]) -> "SparsePoly":
        """Return f(M x), where ``matrix`` rows give the new coordinates."""
        gens = SparsePoly.gens(self.vars)
        images = []
        for row in matrix:
            acc = SparsePoly(self.vars)
            for c, g in zip(row, gens):
                if c != 0:
                    acc = acc + g * c
            images.append(acc)
        return self.substitute(images)

    def rename(self, vars: Sequence[str]) -> "SparsePoly":
        if len(vars) != len(self.vars):
            raise ValueError("rename needs the same number of variables")
        return SparsePoly(vars, dict(self.terms), _clean=True)

    def embed(self, vars: Sequence[str]) -> "SparsePoly":
        """View as a polynomial in a larger variable list containing ``self.vars``."""
        idx = [list(vars).index(v) for v in self.vars]
        n = len(self.vars)
        out = {}
        for k, c in self.terms.items():
            e = unpack(k, n)
            full = [0] * len(vars)
            for i, ei in zip(idx, e):
                full[i] = ei
            out[pack(full)] = c
        return SparsePoly(vars, out, _clean=True)

    def homogeneous_part(self, d: int) -> "SparsePoly":
        return SparsePoly(self.vars, {k: c for k, c in self.terms.items() if _total_degree(k) == d},
                          _clean=True)

    def coefficient_in(self, var: str | int, e: int) -> "SparsePoly":
        """Coefficient of ``var**e`` as a polynomial in the same variables (var removed)."""
        i = var if isinstance(var, int) else self.vars.index(var)
        shift = _BITS * i
        out = {}
        for k, c in self.terms.items():
            if ((k >> shift) & _MASK) == e:
                out[k - (e << shift)] = c
        return SparsePoly(self.vars, out, _clean=True)

    def content_denominator(self) -> int:
        from math import lcm

        den = 1
        for c in self.terms.values():
            den = lcm(den, getattr(c, "denominator", 1))
        return den

    # ------------------------------------------------------------------ display
    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.items():
            mono = "*".join(
                (v if e == 1 else f"{v}^{e}") for v, e in zip(self.vars, exp) if e
            )
            if not mono:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, in lex order (largest first)."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for e in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - e):
            out.append((e,) + rest)
    return out


def poly_from_vector(vars: Sequence[str], basis: Sequence[tuple[int, ...]], vec: Sequence) -> SparsePoly:
    return SparsePoly(vars, {pack(e): c for e, c in zip(basis, vec) if c != 0}, _clean=True)


def poly_to_vector(f: SparsePoly, basis: Sequence[tuple[int, ...]]) -> list:
    index = {pack(e): i for i, e in enumerate(basis)}
    vec = [0] * len(basis)
    for k, c in f.terms.items():
        if k not in index:
            raise ValueError("polynomial has a term outside the monomial basis")
        vec[index[k]] = c
    return vec
