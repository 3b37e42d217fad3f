"""The geometric probability measure as an exact function of the ratio r.

Atom k >= 1 carries mass (1-r)*r^(k-1) and atom 0 carries mass zero, so
sets may contain 0 without it ever contributing to a measure.  Three entry
points share that convention: a symbolic closed form, exact evaluation at
a rational ratio, and a truncated-series float used as a cross-check
oracle.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .polynomials import ONE, Polynomial, RationalFunction
from .sets import EPSet, FiniteSet, SetSpec, prefix, rebased

ONE_MINUS_R = Polynomial((1, -1))


def _power_sum(exponents) -> Polynomial:
    """Sum of r^e over the given exponents (with multiplicity collapsed upstream)."""
    exponents = list(exponents)
    if not exponents:
        return Polynomial()
    coeffs = [0] * (max(exponents) + 1)
    for e in exponents:
        coeffs[e] += 1
    return Polynomial(tuple(coeffs))


def measure_symbolic(s: SetSpec) -> RationalFunction:
    """Closed-form measure: sum of (1-r)*r^(k-1) over the positive members."""
    if isinstance(s, FiniteSet):
        body = _power_sum(k - 1 for k in s if k >= 1)
        return RationalFunction(ONE_MINUS_R * body, ONE)
    # rebase so the periodic part starts at position >= 1; the prefix sum
    # can then skip atom 0 explicitly and the geometric tail never sees it
    plen, pre, qlen, off = rebased(s, max(1, s.plen))
    head = _power_sum(k - 1 for k in pre if k >= 1)
    tail = _power_sum(off)
    cycle = ONE - Polynomial.monomial(qlen)
    num = ONE_MINUS_R * (head * cycle + Polynomial.monomial(plen - 1) * tail)
    return RationalFunction(num, cycle)


def measure_at(s: SetSpec, r) -> Fraction:
    """Exact measure at a rational ratio r in (0,1)."""
    r = Fraction(r)
    if not 0 < r < 1:
        raise ValueError("ratio must satisfy 0 < r < 1")
    if isinstance(s, FiniteSet):
        return sum(((1 - r) * r ** (k - 1) for k in s if k >= 1), Fraction(0))
    plen, pre, qlen, off = rebased(s, max(1, s.plen))
    head = sum(((1 - r) * r ** (k - 1) for k in pre if k >= 1), Fraction(0))
    tail = sum((r ** o for o in off), Fraction(0))
    return head + (1 - r) * r ** (plen - 1) * tail / (1 - r ** qlen)


def measure_numeric(s: SetSpec, r: float, tol: float) -> float:
    """Truncated-series float measure, within tol of the exact value.

    The mass beyond position K is exactly r^K, so summing the members up to
    the smallest K with r^K <= tol gives the stated error bound.
    """
    if not 0 < r < 1:
        raise ValueError("ratio must satisfy 0 < r < 1")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    k = max(1, math.ceil(math.log(tol) / math.log(r)))
    while r ** k > tol:
        k += 1
    return sum((1 - r) * r ** (e - 1) for e in prefix(s, k) if e >= 1)
