"""Integer polynomials and reduced rational functions."""

import random
from fractions import Fraction

import pytest

from geomindep.polynomials import (
    ONE,
    X,
    ZERO,
    Polynomial,
    RationalFunction,
    div_exact,
    poly_divides,
    poly_gcd,
)


def test_multiplication_expands():
    # (2r - 1)(1 + r) = 2r^2 + r - 1
    assert Polynomial((-1, 2)) * Polynomial((1, 1)) == Polynomial((-1, 1, 2))


def test_subtracting_self_gives_zero():
    p = Polynomial((3, 0, -2, 5))
    assert (p - p).is_zero
    assert p - p == ZERO


def test_telescoping_factor():
    assert Polynomial((1, -1)) * Polynomial((1, 1, 1)) == Polynomial((1, 0, 0, -1))


def test_trailing_zeros_trimmed():
    assert Polynomial((1, 2, 0, 0)) == Polynomial((1, 2))
    assert Polynomial((0, 0)).degree == -1


def test_non_integer_coefficients_rejected():
    with pytest.raises(TypeError):
        Polynomial((1, 0.5))


def _two_x_minus_one_times(m):
    # (2r - 1)(1 + r^m) - r^m, built from the public ops
    return (2 * X - 1) * (ONE + Polynomial.monomial(m)) - Polynomial.monomial(m)


def test_evaluate_at_half():
    # hand computation: 2*(1/16) - 2*(1/8) + 1 - 1 = -1/8
    assert _two_x_minus_one_times(3).evaluate(Fraction(1, 2)) == Fraction(-1, 8)


def test_evaluate_at_one():
    for m in range(1, 8):
        assert _two_x_minus_one_times(m).evaluate(Fraction(1)) == 1


def test_evaluate_quartic_at_half():
    # (1/2)^4 + (1/2)^2 - 1 = 1/16 + 4/16 - 16/16
    p = Polynomial((-1, 0, 1, 0, 1))
    assert p.evaluate(Fraction(1, 2)) == Fraction(-11, 16)


def test_power_matches_repeated_multiplication():
    p = Polynomial((1, 1))
    assert p**3 == p * p * p
    assert p**0 == ONE


def test_divides_examples():
    d = Polynomial((-1, 0, 1, 0, 1))
    assert poly_divides(d, Polynomial((0, -1, 0, 1, 0, 1)))
    assert not poly_divides(d, Polynomial.monomial(3))
    assert poly_divides(Polynomial((-1, 1)), ONE - Polynomial.monomial(8))
    assert poly_divides(d, ZERO)


def test_divides_zero_divisor_rejected():
    with pytest.raises(ValueError):
        poly_divides(ZERO, ONE)


def test_div_exact_roundtrip():
    rng = random.Random(8101)
    for _ in range(80):
        d = _rand_poly(rng)
        if d.is_zero:
            continue
        q = _rand_poly(rng)
        assert div_exact(d * q, d) == q


def test_div_exact_rejects_remainder():
    with pytest.raises(ValueError):
        div_exact(Polynomial((1, 1, 1)), Polynomial((1, 1)))


def test_ratfn_cancels_common_factor():
    f = RationalFunction(Polynomial((1, 0, -1)), Polynomial((1, -1)))
    assert f.num == Polynomial((1, 1))
    assert f.den == ONE


def test_ratfn_cancels_hidden_factor():
    f = RationalFunction(Polynomial((1, -1)), Polynomial((1, 0, 0, -1)))
    assert f.num == ONE
    assert f.den == Polynomial((1, 1, 1))


def test_ratfn_zero_numerator_collapses():
    f = RationalFunction(ZERO, Polynomial((1, 1)))
    assert f.num == ZERO
    assert f.den == ONE
    assert f.is_zero


def test_ratfn_zero_denominator_rejected():
    with pytest.raises(ValueError):
        RationalFunction(ONE, ZERO)


def test_ratfn_sign_normalized():
    f = RationalFunction(ONE, Polynomial((-1, -1)))
    assert f.den == Polynomial((1, 1))
    assert f.num == Polynomial((-1,))


def test_ratfn_equality_across_representations():
    prod = (ONE + X) * (ONE + Polynomial.monomial(2)) * (ONE + Polynomial.monomial(4))
    assert prod == Polynomial((1,) * 8)
    lhs = RationalFunction(Polynomial((1, -1)), ONE - Polynomial.monomial(8))
    assert lhs == RationalFunction(ONE, prod)


def test_ratfn_inequality():
    assert RationalFunction(ONE, Polynomial((1, 1))) != RationalFunction(
        Polynomial((1, -1)), ONE
    )


def test_ratfn_arithmetic():
    half = RationalFunction(ONE, Polynomial((1, 1)))
    assert half + half == RationalFunction(Polynomial((2,)), Polynomial((1, 1)))
    assert half * Polynomial((1, 1)) == RationalFunction(ONE, ONE)
    assert (half - half).is_zero
    assert (half / half).is_one


def _rand_poly(rng, max_deg=6, lo=-5, hi=5):
    length = rng.randint(0, max_deg)
    return Polynomial(tuple(rng.randint(lo, hi) for _ in range(length)))


def _rand_positive_poly(rng, max_deg=5):
    # all-positive coefficients: no roots in (0, 1), safe as a denominator
    length = rng.randint(1, max_deg)
    return Polynomial(tuple(rng.randint(1, 4) for _ in range(length)))


def test_evaluation_is_a_ring_homomorphism():
    rng = random.Random(8102)
    for _ in range(200):
        p = _rand_poly(rng)
        q = _rand_poly(rng)
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
        assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


def test_ratfn_equality_matches_pointwise_agreement():
    # with positive-coefficient denominators every point in (0,1) is usable,
    # and 3*maxdeg + 1 samples exceed the degree of the cross difference
    rng = random.Random(8103)
    for _ in range(60):
        f = RationalFunction(_rand_poly(rng), _rand_positive_poly(rng))
        if rng.random() < 0.5:
            scale = _rand_positive_poly(rng)
            g = RationalFunction(f.num * scale, f.den * scale)
        else:
            g = RationalFunction(_rand_poly(rng), _rand_positive_poly(rng))
        deg = max(f.num.degree, f.den.degree, g.num.degree, g.den.degree, 1)
        points = [Fraction(k, 3 * deg + 2) for k in range(1, 3 * deg + 2)]
        agree = all(f.evaluate(x) == g.evaluate(x) for x in points)
        assert (f == g) == agree


def test_ratfn_normalization_is_idempotent_and_value_preserving():
    rng = random.Random(8104)
    for _ in range(100):
        num = _rand_poly(rng)
        den = _rand_positive_poly(rng)
        f = RationalFunction(num, den)
        again = RationalFunction(f.num, f.den)
        assert (again.num, again.den) == (f.num, f.den)
        x = Fraction(rng.randint(1, 9), 10)
        assert f.evaluate(x) == num.evaluate(x) / den.evaluate(x)


def test_poly_gcd_symmetric_and_divides_both():
    rng = random.Random(8105)
    for _ in range(60):
        p = _rand_poly(rng)
        q = _rand_poly(rng)
        g = poly_gcd(p, q)
        if g.is_zero:
            assert p.is_zero and q.is_zero
            continue
        assert poly_divides(g, p)
        assert poly_divides(g, q)
        assert poly_gcd(q, p) == g
