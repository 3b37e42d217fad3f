"""Certified brackets for the ratio threshold below which the converse
classification of independent pairs holds.

For block length m >= 1 the threshold t_m is the unique root in (1/2, 1)
of threshold_fn(m, x) = (2x-1)(1+x^m) - x^m.  The function is strictly
increasing there with threshold_fn(m, 1/2) = -1/2^m and threshold_fn(m, 1)
= 1, so bisection with exact rational endpoints maintains a strict sign
change.  The only rational candidates the rational root theorem allows
(+-1, +-1/2) all fail, hence no midpoint is ever an exact root and t_m is
irrational; both refinement loops below terminate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Threshold:
    m: int
    value: float
    tol: Fraction
    bracket: tuple[Fraction, Fraction]


def threshold_fn(m: int, x) -> Fraction:
    """(2x-1)(1+x^m) - x^m, exactly."""
    if not isinstance(m, int) or m < 1:
        raise ValueError("block length m must be >= 1")
    xm = x ** m
    return (2 * x - 1) * (1 + xm) - xm


def _refine(m: int, lo: Fraction, hi: Fraction, done) -> tuple[Fraction, Fraction]:
    while not done(lo, hi):
        mid = (lo + hi) / 2
        v = threshold_fn(m, mid)
        if v == 0:
            raise RuntimeError("bisection hit an exact root, which cannot happen")
        if v < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def solve_threshold(m: int, tol=Fraction(1, 10 ** 12)) -> Threshold:
    """Bracket t_m to width <= tol; endpoints are exact rationals."""
    if not isinstance(m, int) or m < 1:
        raise ValueError("block length m must be >= 1")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    lo, hi = _refine(m, Fraction(1, 2), Fraction(1), lambda a, b: b - a <= tol)
    return Threshold(m, float((lo + hi) / 2), tol, (lo, hi))


def truncated_value(m: int, digits: int) -> str:
    """Decimal expansion of t_m truncated (not rounded) to `digits` digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scale = 10 ** digits

    def floor_scaled(f: Fraction) -> int:
        return (f.numerator * scale) // f.denominator

    t = solve_threshold(m, Fraction(1, scale * 1000))
    # tighten until the bracket stops straddling a grid point, so the
    # truncation is determined by the bracket alone
    lo, _ = _refine(m, *t.bracket, lambda a, b: floor_scaled(a) == floor_scaled(b))
    return "0." + str(floor_scaled(lo)).zfill(digits)
