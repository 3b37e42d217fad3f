"""Shared test helpers: seeded random generators and membership oracles."""

from fractions import Fraction

from geomindep.sets import EPSet, FiniteSet


def rand_finite(rng, max_elem=20, allow_empty=False):
    lo = 0 if allow_empty else 1
    count = rng.randint(lo, 6)
    return FiniteSet(tuple(rng.sample(range(max_elem + 1), count)))


def rand_epset(rng, max_plen=4, max_qlen=6):
    plen = rng.randint(0, max_plen)
    qlen = rng.randint(1, max_qlen)
    pre = tuple(k for k in range(plen) if rng.random() < 0.4)
    off = tuple(o for o in range(qlen) if rng.random() < 0.4)
    return EPSet(plen, pre, qlen, off)


def rand_set(rng):
    return rand_finite(rng) if rng.random() < 0.5 else rand_epset(rng)


def rand_ratio(rng, max_den=9):
    den = rng.randint(2, max_den)
    num = rng.randint(1, den - 1)
    return Fraction(num, den)


def members_upto(s, n):
    return [k for k in range(n + 1) if k in s]
