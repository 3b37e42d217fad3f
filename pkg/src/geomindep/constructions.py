"""Every event family this package can build with an exactness guarantee.

The base object is the alternating block set: blocks {1..n-1} repeating
with period 2(n-1).  From it grow pairs (a seed inside the blocks, summed
with {0, n-1}), triples (a divisor refinement of the blocks), iterated
sequences through the class-index quotient, the multiples pair, the
golden-ratio pair that is independent only at an algebraic ratio, and the
finite truncation of the space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomials import Polynomial
from .sets import (
    EPSet,
    FiniteSet,
    SetSpec,
    from_predicate,
    intersect,
    is_empty,
    is_subset,
    minkowski,
)

MAX_SEQUENCE_PERIOD = 1 << 16


def alternating_blocks(n: int) -> EPSet:
    """Blocks {1,...,n-1} repeating with period 2(n-1)."""
    if not isinstance(n, int) or n < 2:
        raise ValueError("block parameter n must be >= 2")
    return EPSet(0, (), 2 * (n - 1), tuple(range(1, n)))


@dataclass(frozen=True)
class PairSpec:
    n: int
    T: SetSpec
    A: SetSpec
    B: EPSet


def build_pair(n: int, seed: SetSpec) -> PairSpec:
    """A = {0, n-1} + seed for a nonempty seed inside the block set.

    Such a pair is independent for every ratio in (0,1).
    """
    blocks = alternating_blocks(n)
    if is_empty(seed):
        raise ValueError("the seed set must be nonempty")
    if not is_subset(seed, blocks):
        raise ValueError("the seed set must lie inside the block set")
    grown = minkowski(FiniteSet((0, n - 1)), seed)
    return PairSpec(n, seed, grown, blocks)


@dataclass(frozen=True)
class TripleSpec:
    n: int
    b: int
    k: int
    T: SetSpec
    B1: EPSet
    A1: SetSpec
    A2: SetSpec
    B: EPSet


def build_triple(n: int, b: int, seed: SetSpec) -> TripleSpec:
    """Refine the blocks of width n-1 into k blocks of width b-1 each.

    Requires 2(b-1) to divide m = n-1 and a nonempty seed inside the
    refined block set; A1, A2 and the outer block set are then mutually
    independent for every ratio.
    """
    if not isinstance(n, int) or n < 3:
        raise ValueError("triple construction needs n >= 3")
    if not isinstance(b, int) or not 2 <= b <= n - 1:
        raise ValueError("inner block parameter b must lie in {2,...,n-1}")
    m = n - 1
    if m % (2 * (b - 1)):
        raise ValueError(f"2(b-1) must divide n-1; fails for (n,b)=({n},{b})")
    k = m // (2 * (b - 1))
    w = b - 1
    inner = []
    for j in range(k):
        inner.extend(range(2 * j * w + 1, (2 * j + 1) * w + 1))
    refined = EPSet(0, (), 2 * m, tuple(inner))
    if is_empty(seed):
        raise ValueError("the seed set must be nonempty")
    if not is_subset(seed, refined):
        raise ValueError("the seed set must lie inside the refined block set")
    grown_seed = minkowski(FiniteSet((0, w)), seed)
    outer_shift = FiniteSet((0, m))
    return TripleSpec(
        n,
        b,
        k,
        seed,
        refined,
        minkowski(outer_shift, grown_seed),
        minkowski(outer_shift, refined),
        alternating_blocks(n),
    )


def multiples_pair(n: int) -> tuple[FiniteSet, EPSet]:
    """A = {1,...,n} and B = {n, 2n, 3n, ...}, independent for every ratio."""
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be >= 1")
    a = FiniteSet(tuple(range(1, n + 1)))
    b = EPSet(1, (), n, (n - 1,))
    return a, b


def golden_ratio_counterexample() -> tuple[FiniteSet, EPSet, Polynomial]:
    """The pair ({1,4,6}, odds) with the modulus r^4 + r^2 - 1.

    Independent exactly at the roots of the modulus (where r^2 is the
    reciprocal golden ratio) but at no other ratio, and not expressible
    as {0,1} + seed; the pair witnesses that the converse classification
    stops at the threshold.
    """
    return FiniteSet((1, 4, 6)), alternating_blocks(2), Polynomial((-1, 0, 1, 0, 1))


def quotient_lift(n: int, classes: SetSpec) -> SetSpec:
    """Replace each class index k >= 1 by the k-th block of the block set.

    Block k occupies positions (2k-2)(n-1)+1 through (2k-1)(n-1), so the
    result is a subset of the block set.  Class index 0 has no block.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError("block parameter n must be >= 2")
    if 0 in classes:
        raise ValueError("class indices start at 1; class 0 is empty")
    m = n - 1
    if isinstance(classes, FiniteSet):
        out = []
        for k in classes:
            start = (2 * k - 2) * m + 1
            out.extend(range(start, start + m))
        return FiniteSet(tuple(out))

    def pred(x: int) -> bool:
        if x < 1:
            return False
        q, rem = divmod(x - 1, 2 * m)
        return rem < m and (q + 1) in classes

    # class index k lives at positions (2k-2)m+1..(2k-1)m, so preperiod and
    # period both scale by the position stride 2m
    return from_predicate(pred, 2 * m * classes.plen, 2 * m * classes.qlen)


def quotient_lower(n: int, classes: SetSpec) -> SetSpec:
    """Lift the class set, then sum with {0, n-1}.

    The plain lift stays inside the block set and cannot be independent of
    it; the extra sum restores independence while keeping the measure of
    the class set under the substituted ratio r^(2(n-1)).
    """
    return minkowski(FiniteSet((0, n - 1)), quotient_lift(n, classes))


@dataclass(frozen=True)
class SequenceSpec:
    params: tuple[int, ...]
    sets: tuple[SetSpec, ...]


def build_sequence(params) -> SequenceSpec:
    """Iterate the quotient construction along a list of block parameters.

    sets[0] is the block set of params[0]; sets[i] is the block set of
    params[i] lowered through params[i-1], ..., params[0] in turn.  The
    whole family is mutually independent for every ratio.
    """
    params = tuple(params)
    if not params:
        raise ValueError("need at least one block parameter")
    if not all(isinstance(p, int) and p >= 2 for p in params):
        raise ValueError("every block parameter must be >= 2")
    period = 1
    for p in params:
        period *= 2 * (p - 1)
    if period > MAX_SEQUENCE_PERIOD:
        raise ValueError(
            f"materialized period {period} exceeds the cap {MAX_SEQUENCE_PERIOD}"
        )
    sets = []
    for i, p in enumerate(params):
        s: SetSpec = alternating_blocks(p)
        for outer in reversed(params[:i]):
            s = quotient_lower(outer, s)
        sets.append(s)
    return SequenceSpec(params, tuple(sets))


@dataclass(frozen=True)
class FiniteSpaceCheck:
    n: int
    s: int
    t: int
    q: float
    residual: float
    A: FiniteSet
    B: FiniteSet


def finite_space_check(n: int, s: int) -> FiniteSpaceCheck:
    """The finite space {1..n} with P(k) = q^k, q solving sum q^k = 1.

    For n = s*t the events A = {1..s} and B = {1, s+1, ..., (t-1)s+1}
    intersect in {1} alone and satisfy P(A)P(B) = q algebraically, so the
    reported residual |P(A&B) - P(A)P(B)| measures only the root-finding
    error.
    """
    if not isinstance(s, int) or s < 2:
        raise ValueError("s must be >= 2")
    if not isinstance(n, int) or n < 1 or n % s:
        raise ValueError(f"s must divide n; fails for (n,s)=({n},{s})")
    t = n // s
    if t < 2:
        raise ValueError("the cofactor t = n/s must be >= 2")

    def total(q: float) -> float:
        return sum(q ** k for k in range(1, n + 1)) - 1.0

    lo, hi = 0.0, 1.0
    while True:
        mid = (lo + hi) / 2
        if mid <= lo or mid >= hi:
            break
        if total(mid) < 0:
            lo = mid
        else:
            hi = mid
    q = lo if abs(total(lo)) <= abs(total(hi)) else hi
    a = FiniteSet(tuple(range(1, s + 1)))
    b = FiniteSet(tuple(j * s + 1 for j in range(t)))
    pa = sum(q ** k for k in a)
    pb = sum(q ** k for k in b)
    pab = sum(q ** k for k in intersect(a, b))
    return FiniteSpaceCheck(n, s, t, q, abs(pab - pa * pb), a, b)
