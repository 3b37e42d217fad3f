"""Brute-force verification at a fixed rational ratio.

Three tools: exhaustive enumeration of the finite sets independent of a
given event, the desk-scale converse check (below the threshold, every
independent set must be a block seed summed with {0, n-1}, up to the null
atom), and the tail bound for sets avoiding the blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .constructions import alternating_blocks
from .measure import measure_at
from .sets import FiniteSet, SetSpec, diff, intersect, is_empty, minkowski, sets_equal
from .thresholds import Threshold, solve_threshold

MAX_ENUM_BOUND = 24


def enumerate_independent(b: SetSpec, r, bound: int) -> list[FiniteSet]:
    """All nontrivial subsets of {0..bound} independent of b at the ratio r.

    Walks the 2^(bound+1) subsets in Gray-code order, maintaining the
    subset's mass as an integer over the common denominator q^bound, so
    each step is a constant number of integer operations and every test is
    exact.
    """
    r = Fraction(r)
    if not 0 < r < 1:
        raise ValueError("ratio must satisfy 0 < r < 1")
    if not isinstance(bound, int) or bound < 0:
        raise ValueError("bound must be a natural")
    if bound > MAX_ENUM_BOUND:
        raise ValueError(f"bound {bound} exceeds the enumeration cap {MAX_ENUM_BOUND}")
    p, q = r.numerator, r.denominator
    nbits = bound + 1
    # atom k has mass (q-p)*p^(k-1)/q^k = weights[k]/q^bound; atom 0 is null
    weights = [0] * nbits
    for k in range(1, nbits):
        weights[k] = (q - p) * p ** (k - 1) * q ** (bound - k)
    in_b = [k in b for k in range(nbits)]
    pb = measure_at(b, r)
    nb, db = pb.numerator, pb.denominator

    found = []
    mass = 0
    mass_in_b = 0
    for i in range(1, 1 << nbits):
        mask = i ^ (i >> 1)
        j = (i & -i).bit_length() - 1
        if mask >> j & 1:
            mass += weights[j]
            if in_b[j]:
                mass_in_b += weights[j]
        else:
            mass -= weights[j]
            if in_b[j]:
                mass_in_b -= weights[j]
        if mask & ~1 == 0:
            continue  # empty or {0}: trivial
        # P(A & b) = P(A) * P(b)  <=>  mass_in_b * db = mass * nb
        if mass_in_b * db == mass * nb:
            found.append(FiniteSet(tuple(k for k in range(nbits) if mask >> k & 1)))
    found.sort(key=lambda f: f.elements)
    return found


@dataclass(frozen=True)
class ConverseReport:
    n: int
    r: Fraction
    bound: int
    found: tuple[FiniteSet, ...]
    violations: tuple[FiniteSet, ...]
    threshold: Threshold


def verify_converse(n: int, r, bound: int) -> ConverseReport:
    """Check that below the threshold every independent set has the grown form.

    Enumerates the sets independent of the block set at r, then tests each
    (after dropping the null atom) against {0, n-1} + seed where the seed
    is recovered as the intersection with the blocks.  The ratio must be
    certified below the threshold: r <= bracket low end.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError("block parameter n must be >= 2")
    r = Fraction(r)
    if not 0 < r < 1:
        raise ValueError("ratio must satisfy 0 < r < 1")
    certificate = solve_threshold(n - 1)
    lo, hi = certificate.bracket
    if r > lo:
        raise ValueError(
            f"r={r} is not certified below the threshold for m={n - 1}: "
            f"need r <= {lo} (bracket [{lo}, {hi}])"
        )
    blocks = alternating_blocks(n)
    found = enumerate_independent(blocks, r, bound)
    shift = FiniteSet((0, n - 1))
    null_atom = FiniteSet((0,))
    violations = []
    for a in found:
        core = diff(a, null_atom)
        seed = intersect(core, blocks)
        if is_empty(seed) or not sets_equal(core, minkowski(shift, seed)):
            violations.append(a)
    return ConverseReport(n, r, bound, tuple(found), tuple(violations), certificate)


@dataclass(frozen=True)
class BoundCheck:
    s: int
    i: int
    j: int
    lhs: Fraction
    rhs: Fraction
    holds: bool


def gap_tail_bound(gap_set: FiniteSet, n: int, r) -> BoundCheck:
    """Tail bound for a finite set avoiding the blocks of the block set.

    With m = n-1 and smallest element s = (2i-1)m + j (1 <= j <= m, the
    i-th gap block), the measure is at most r^(s-1) - r^(2im)/(1+r^m).
    """
    if not isinstance(gap_set, FiniteSet) or not gap_set.elements:
        raise ValueError("need a nonempty finite set")
    if not isinstance(n, int) or n < 2:
        raise ValueError("block parameter n must be >= 2")
    r = Fraction(r)
    if not 0 < r < 1:
        raise ValueError("ratio must satisfy 0 < r < 1")
    blocks = alternating_blocks(n)
    if not is_empty(intersect(gap_set, blocks)):
        raise ValueError("the set must avoid the block set")
    s = gap_set.elements[0]
    if s < n:
        raise ValueError(f"the smallest element must be >= n, got {s}")
    m = n - 1
    i = (s - m - 1) // (2 * m) + 1
    j = s - (2 * i - 1) * m
    if not 1 <= j <= m:
        raise RuntimeError("gap decomposition out of range for a block avoider")
    lhs = measure_at(gap_set, r)
    rhs = r ** (s - 1) - r ** (2 * i * m) / (1 + r ** m)
    return BoundCheck(s, i, j, lhs, rhs, lhs <= rhs)
