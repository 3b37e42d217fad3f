"""Finite and eventually periodic subsets of the nonnegative integers.

Two immutable representations cover every event this package handles:

* ``FiniteSet`` -- an explicit sorted tuple of elements.
* ``EPSet`` -- eventually periodic membership: position x < plen is a
  member iff x is in ``pre``; position x >= plen is a member iff
  ((x - plen) mod qlen) is in ``off``.

``EPSet.__post_init__`` rewrites the representation to the canonical one
(minimal period, then minimal preperiod), so structural equality of two
EPSets decides extensional equality.  Both classes support ``in``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Callable, Union


@dataclass(frozen=True)
class FiniteSet:
    elements: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for e in self.elements:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"set elements must be naturals, got {e!r}")
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))

    def __contains__(self, k: int) -> bool:
        return k in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class EPSet:
    plen: int = 0
    pre: tuple[int, ...] = ()
    qlen: int = 1
    off: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.plen, int) or self.plen < 0:
            raise ValueError("preperiod length must be a natural")
        if not isinstance(self.qlen, int) or self.qlen < 1:
            raise ValueError("period length must be >= 1")
        pre = set(self.pre)
        off = set(self.off)
        if not all(isinstance(p, int) and 0 <= p < self.plen for p in pre):
            raise ValueError("pre must lie in [0, plen)")
        if not all(isinstance(o, int) and 0 <= o < self.qlen for o in off):
            raise ValueError("off must lie in [0, qlen)")
        plen, qlen = self.plen, self.qlen
        # minimal period: smallest divisor of qlen that regenerates the pattern
        for q in range(1, qlen + 1):
            if qlen % q:
                continue
            base = {o for o in off if o < q}
            if all((o in off) == (o % q in base) for o in range(qlen)):
                qlen, off = q, base
                break
        # minimal preperiod: fold trailing prefix positions into the period,
        # rotating the offsets one step each time
        while plen > 0 and ((plen - 1) in pre) == ((qlen - 1) in off):
            pre.discard(plen - 1)
            plen -= 1
            off = {(o + 1) % qlen for o in off}
        object.__setattr__(self, "plen", plen)
        object.__setattr__(self, "pre", tuple(sorted(pre)))
        object.__setattr__(self, "qlen", qlen)
        object.__setattr__(self, "off", tuple(sorted(off)))

    def __contains__(self, k: int) -> bool:
        if k < 0:
            return False
        if k < self.plen:
            return k in self.pre
        return ((k - self.plen) % self.qlen) in self.off


SetSpec = Union[FiniteSet, EPSet]

EMPTY = FiniteSet()
NATURALS = EPSet(0, (), 1, (0,))


def member(s: SetSpec, k: int) -> bool:
    return k in s


def to_epset(s: SetSpec) -> EPSet:
    """Eventually periodic view of any set; finite sets get an empty period."""
    if isinstance(s, EPSet):
        return s
    if not s.elements:
        return EPSet()
    return EPSet(s.elements[-1] + 1, s.elements, 1, ())


def _combine(a: EPSet, b: EPSet, fn: Callable[[bool, bool], bool]) -> EPSet:
    plen = max(a.plen, b.plen)
    qlen = lcm(a.qlen, b.qlen)
    pre = tuple(k for k in range(plen) if fn(k in a, k in b))
    off = tuple(o for o in range(qlen) if fn((plen + o) in a, (plen + o) in b))
    return EPSet(plen, pre, qlen, off)


def union(a: SetSpec, b: SetSpec) -> SetSpec:
    if isinstance(a, FiniteSet) and isinstance(b, FiniteSet):
        return FiniteSet(a.elements + b.elements)
    return _combine(to_epset(a), to_epset(b), lambda x, y: x or y)


def intersect(a: SetSpec, b: SetSpec) -> SetSpec:
    # an intersection with a finite set is finite, so keep it explicit
    if isinstance(a, FiniteSet):
        return FiniteSet(tuple(e for e in a if e in b))
    if isinstance(b, FiniteSet):
        return FiniteSet(tuple(e for e in b if e in a))
    return _combine(a, b, lambda x, y: x and y)


def diff(a: SetSpec, b: SetSpec) -> SetSpec:
    if isinstance(a, FiniteSet):
        return FiniteSet(tuple(e for e in a if e not in b))
    return _combine(a, to_epset(b), lambda x, y: x and not y)


def complement(s: SetSpec) -> EPSet:
    e = to_epset(s)
    pre = tuple(k for k in range(e.plen) if k not in e.pre)
    off = tuple(o for o in range(e.qlen) if o not in e.off)
    return EPSet(e.plen, pre, e.qlen, off)


def translate(s: SetSpec, t: int) -> SetSpec:
    """{x + t : x in s} for a natural shift t."""
    if not isinstance(t, int) or t < 0:
        raise ValueError("translation must be by a natural")
    if isinstance(s, FiniteSet):
        return FiniteSet(tuple(e + t for e in s))
    return EPSet(s.plen + t, tuple(p + t for p in s.pre), s.qlen, s.off)


def minkowski(e: FiniteSet, t: SetSpec) -> SetSpec:
    """{a + b : a in e, b in t}; the left operand must be finite and nonempty."""
    if not isinstance(e, FiniteSet):
        raise ValueError("left operand of the set sum must be finite")
    if not e.elements:
        raise ValueError("left operand of the set sum must be nonempty")
    acc = translate(t, e.elements[0])
    for shift in e.elements[1:]:
        acc = union(acc, translate(t, shift))
    return acc


def prefix(s: SetSpec, n: int) -> FiniteSet:
    """The members of s that are <= n, as an explicit finite set."""
    if n < 0:
        raise ValueError("prefix bound must be a natural")
    if isinstance(s, FiniteSet):
        return FiniteSet(tuple(e for e in s if e <= n))
    return FiniteSet(tuple(k for k in range(n + 1) if k in s))


def sets_equal(a: SetSpec, b: SetSpec) -> bool:
    """Extensional equality, decided on canonical eventually periodic forms."""
    return to_epset(a) == to_epset(b)


def is_empty(s: SetSpec) -> bool:
    if isinstance(s, FiniteSet):
        return not s.elements
    return not (s.pre or s.off)


def is_subset(a: SetSpec, b: SetSpec) -> bool:
    return is_empty(diff(a, b))


def from_predicate(pred: Callable[[int], bool], plen: int, qlen: int) -> EPSet:
    """Build a set by sampling pred over one preperiod and one period window.

    The caller guarantees that pred is eventually periodic with preperiod
    plen and period qlen; the result is then exact.
    """
    if plen < 0 or qlen < 1:
        raise ValueError("need plen >= 0 and qlen >= 1")
    pre = tuple(k for k in range(plen) if pred(k))
    off = tuple(o for o in range(qlen) if pred(plen + o))
    return EPSet(plen, pre, qlen, off)


def rebased(s: EPSet, min_plen: int) -> tuple[int, tuple[int, ...], int, tuple[int, ...]]:
    """A non-canonical (plen, pre, qlen, off) view of s with plen >= min_plen.

    Unrolls the period one position at a time; the extension is unchanged.
    """
    plen, qlen = s.plen, s.qlen
    pre, off = set(s.pre), set(s.off)
    while plen < min_plen:
        if 0 in off:
            pre.add(plen)
        off = {(o - 1) % qlen for o in off}
        plen += 1
    return plen, tuple(sorted(pre)), qlen, tuple(sorted(off))
