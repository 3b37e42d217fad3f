"""Independence checks for families of events.

A family of k events is mutually independent when the product rule holds
for every index subset of size >= 2, giving 2^k - k - 1 conditions.  Each
condition can be decided three ways:

* symbolically, as a rational-function identity in r (independence for
  every ratio in (0,1) at once);
* exactly at a fixed rational r;
* modulo a polynomial, certifying the identity at every root of that
  polynomial (how independence at an algebraic ratio is checked).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations

from .measure import measure_at, measure_symbolic
from .polynomials import Polynomial, poly_divides, poly_gcd
from .sets import SetSpec, intersect, is_subset


@dataclass(frozen=True)
class Condition:
    index_subset: tuple[int, ...]
    lhs: object
    rhs: object
    passed: bool


@dataclass(frozen=True)
class IndependenceReport:
    mode: str
    conditions: tuple[Condition, ...]
    independent: bool
    r: Fraction | None = None
    minpoly: Polynomial | None = None


def _index_subsets(k: int) -> list[tuple[int, ...]]:
    subsets = []
    for size in range(2, k + 1):
        subsets.extend(combinations(range(k), size))
    return sorted(subsets)


def _family_report(sets, mode, measure_fn, check_fn, **extra) -> IndependenceReport:
    if len(sets) < 2:
        raise ValueError("independence needs at least two events")
    singles = [measure_fn(s) for s in sets]
    conditions = []
    for subset in _index_subsets(len(sets)):
        inter = reduce(intersect, (sets[i] for i in subset))
        lhs = measure_fn(inter)
        rhs = singles[subset[0]]
        for i in subset[1:]:
            rhs = rhs * singles[i]
        conditions.append(Condition(subset, lhs, rhs, check_fn(lhs, rhs)))
    return IndependenceReport(
        mode=mode,
        conditions=tuple(conditions),
        independent=all(c.passed for c in conditions),
        **extra,
    )


def indep_family_symbolic(sets: list[SetSpec]) -> IndependenceReport:
    """Mutual independence as exact rational-function identities in r."""
    return _family_report(sets, "symbolic", measure_symbolic, lambda a, b: a == b)


def indep_family_at(sets: list[SetSpec], r) -> IndependenceReport:
    """Mutual independence by exact rational arithmetic at a fixed ratio."""
    r = Fraction(r)
    if not 0 < r < 1:
        raise ValueError("ratio must satisfy 0 < r < 1")
    return _family_report(
        sets, "at_rational", lambda s: measure_at(s, r), lambda a, b: a == b, r=r
    )


def indep_family_mod(sets: list[SetSpec], minpoly: Polynomial) -> IndependenceReport:
    """Mutual independence at every root of minpoly.

    A condition passes iff minpoly divides the cross-multiplied numerator
    difference; a condition whose denominator shares a factor with minpoly
    is undefined at some root and rejected outright.
    """
    if not isinstance(minpoly, Polynomial) or minpoly.degree < 1:
        raise ValueError("the modulus must be a nonconstant polynomial")

    def check(lhs, rhs) -> bool:
        if poly_gcd(lhs.den * rhs.den, minpoly).degree > 0:
            raise ValueError(
                "a condition denominator shares a factor with the modulus"
            )
        return poly_divides(minpoly, lhs.num * rhs.den - rhs.num * lhs.den)

    return _family_report(sets, "mod_minpoly", measure_symbolic, check, minpoly=minpoly)


def cond_indep_given(t1: SetSpec, t2: SetSpec, b: SetSpec) -> IndependenceReport:
    """Independence of t1 and t2 conditioned on b, checked symbolically.

    Both events must be subsets of b; the check is the cross-multiplied
    form P(t1 & t2) * P(b) = P(t1) * P(t2), which never divides by P(b).
    """
    if not (is_subset(t1, b) and is_subset(t2, b)):
        raise ValueError("conditioned events must be subsets of the conditioning event")
    pb = measure_symbolic(b)
    if pb.is_zero():
        raise ValueError("cannot condition on a null event")
    lhs = measure_symbolic(intersect(t1, t2)) * pb
    rhs = measure_symbolic(t1) * measure_symbolic(t2)
    cond = Condition((0, 1), lhs, rhs, lhs == rhs)
    return IndependenceReport("conditional", (cond,), cond.passed)


def is_trivial(s: SetSpec) -> bool:
    """True iff the event has probability identically 0 or identically 1."""
    m = measure_symbolic(s)
    return m.is_zero() or m.is_one()
