"""Exact polynomial and rational-function arithmetic in the ratio variable r.

Every probability handled by this package is an exact rational function of
the geometric ratio r, so the whole library rests on the two value types
defined here:

* ``Polynomial`` -- dense integer coefficients in ascending degree with no
  trailing zeros; the empty tuple is the zero polynomial.
* ``RationalFunction`` -- a quotient of polynomials kept in canonical form
  (common polynomial factor and shared integer content removed, denominator
  leading coefficient positive), so ``==`` decides identity of the two
  functions everywhere they are defined.

``Rational`` is an alias for :class:`fractions.Fraction`, which already is
an arbitrary-precision rational in lowest terms with positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest

Rational = Fraction


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial ``coeffs[0] + coeffs[1]*r + coeffs[2]*r^2 + ...``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cs = tuple(self.coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be ints, got {c!r}")
        end = len(cs)
        while end > 0 and cs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", cs[:end])

    @staticmethod
    def monomial(k: int, c: int = 1) -> "Polynomial":
        if k < 0:
            raise ValueError("monomial degree must be >= 0")
        return Polynomial((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "Polynomial":
        """Content removed and leading coefficient made positive; zero stays zero."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.leading() < 0:
            c = -c
        return Polynomial(tuple(x // c for x in self.coeffs))

    def evaluate(self, x: Fraction | int) -> Fraction | int:
        acc: Fraction | int = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(
            tuple(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))
        )

    __radd__ = __add__

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "Polynomial | int") -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


def _as_poly(v):
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, int):
        return Polynomial((v,))
    return NotImplemented


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def _rem_frac(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of a by b over the rationals; b is nonzero and trimmed."""
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    for i in range(len(rem) - db - 1, -1, -1):
        c = rem[i + db] / lead
        if c:
            rem[i + db] = Fraction(0)
            for j in range(db):
                rem[i + j] -= c * b[j]
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Primitive gcd with positive leading coefficient; zero iff both inputs are zero."""
    fa = [Fraction(c) for c in p.coeffs]
    fb = [Fraction(c) for c in q.coeffs]
    while fb:
        fa, fb = fb, _rem_frac(fa, fb)
        # keep coefficients tame
        lead = fa[-1]
        if lead != 1:
            fa = [c / lead for c in fa]
    if not fa:
        return ZERO
    scale = math.lcm(*(c.denominator for c in fa))
    return Polynomial(tuple(int(c * scale) for c in fa)).primitive()


def _divmod_frac(p: Polynomial, d: Polynomial) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder of p by d over the rationals."""
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in p.coeffs]
    dc = [Fraction(c) for c in d.coeffs]
    dd = len(dc) - 1
    lead = dc[-1]
    quo = [Fraction(0)] * max(len(rem) - dd, 0)
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + dd] / lead
        if c:
            quo[i] = c
            for j in range(dd + 1):
                rem[i + j] -= c * dc[j]
    return quo, rem[:dd]


def poly_divides(d: Polynomial, p: Polynomial) -> bool:
    """True iff p is a multiple of d over the rationals."""
    if d.is_zero():
        raise ValueError("zero divisor")
    if p.is_zero():
        return True
    if p.degree < d.degree:
        return False
    _, rem = _divmod_frac(p, d)
    return not any(rem)


def div_exact(p: Polynomial, d: Polynomial) -> Polynomial:
    """p // d, requiring that d divides p with an integer quotient."""
    quo, rem = _divmod_frac(p, d)
    if any(rem):
        raise ValueError(f"{d} does not divide {p}")
    if any(c.denominator != 1 for c in quo):
        raise ValueError(f"non-integer quotient of {p} by {d}")
    return Polynomial(tuple(int(c) for c in quo))


@dataclass(frozen=True)
class RationalFunction:
    """Canonical quotient of integer polynomials, normalized on construction."""

    num: Polynomial = ZERO
    den: Polynomial = ONE

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den.is_zero():
            raise ValueError("zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = div_exact(num, g)
                den = div_exact(den, g)
            c = math.gcd(num.content(), den.content())
            if den.leading() < 0:
                c = -c
            if c != 1:
                num = Polynomial(tuple(x // c for x in num.coeffs))
                den = Polynomial(tuple(x // c for x in den.coeffs))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == ONE and self.den == ONE

    def evaluate(self, x: Fraction | int) -> Fraction:
        return Fraction(self.num.evaluate(x)) / self.den.evaluate(x)

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_ratfn(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)


def _as_ratfn(v):
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, Polynomial):
        return RationalFunction(v, ONE)
    if isinstance(v, int):
        return RationalFunction(Polynomial((v,)), ONE)
    if isinstance(v, Fraction):
        return RationalFunction(
            Polynomial((v.numerator,)), Polynomial((v.denominator,))
        )
    return NotImplemented


RF_ZERO = RationalFunction()
RF_ONE = RationalFunction(ONE)
