"""Series prefixes and the two brute-force inversion constructions."""

import random

import pytest

from helpers import random_denominator, random_poly
from ratgen.errors import BadConstantTerm, NegativeOrder, OrderMismatch
from ratgen.poly import Polynomial
from ratgen.series import (
    SeriesPrefix,
    cauchy_mul,
    geometric_inverse,
    multinomial_inverse,
)

x = Polynomial.variable("x")
one = Polynomial.one()
zero = Polynomial.zero()


def consts(*values: int) -> SeriesPrefix:
    return SeriesPrefix([Polynomial.constant(v) for v in values])


def test_prefix_shape():
    s = consts(1, 2, 3)
    assert s.order == 2
    assert len(s) == 3
    assert s[1] == Polynomial.constant(2)


def test_prefix_rejects_series_variable():
    from ratgen.parser import parse_poly

    with pytest.raises(ValueError):
        SeriesPrefix([parse_poly("t")])


def test_cauchy_geometric_times_denominator():
    # (1/(1-t)) * (1-t) = 1, truncated
    assert cauchy_mul(consts(1, 1, 1), consts(1, -1, 0)) == consts(1, 0, 0)


def test_cauchy_identity():
    a = SeriesPrefix([one, x, x**2 + one, zero])
    assert cauchy_mul(a, SeriesPrefix.identity(3)) == a


def test_cauchy_shift_by_t():
    a = SeriesPrefix([zero, one, zero, zero])
    b = SeriesPrefix([one, x, x**2 + one, x**3 + Polynomial.term(2, {"x": 1})])
    # independent oracle: direct convolution sum
    expected = []
    for k in range(4):
        total = zero
        for j in range(k + 1):
            total = total + a[j] * b[k - j]
        expected.append(total)
    got = cauchy_mul(a, b)
    assert got == SeriesPrefix(expected)
    # multiplying by t shifts the coefficients up one order
    assert got == SeriesPrefix([zero, one, x, x**2 + one])


def test_cauchy_order_mismatch():
    with pytest.raises(OrderMismatch):
        cauchy_mul(consts(1, 1), consts(1, 1, 1))


def test_cauchy_commutes_and_associates():
    rng = random.Random(314)
    for _ in range(50):
        N = rng.randint(0, 6)
        a = SeriesPrefix([random_poly(rng) for _ in range(N + 1)])
        b = SeriesPrefix([random_poly(rng) for _ in range(N + 1)])
        c = SeriesPrefix([random_poly(rng) for _ in range(N + 1)])
        assert cauchy_mul(a, b) == cauchy_mul(b, a)
        assert cauchy_mul(cauchy_mul(a, b), c) == cauchy_mul(a, cauchy_mul(b, c))


def test_geometric_inverse_of_one_minus_t():
    assert geometric_inverse([one, -one], 4) == consts(1, 1, 1, 1, 1)


def test_geometric_inverse_of_one():
    assert geometric_inverse([one], 3) == SeriesPrefix.identity(3)


def test_geometric_inverse_fibonacci_denominator():
    got = geometric_inverse([one, -x, -one], 3)
    assert got == SeriesPrefix(
        [one, x, x**2 + one, x**3 + Polynomial.term(2, {"x": 1})]
    )


def test_geometric_inverse_rejects_bad_constant_term():
    with pytest.raises(BadConstantTerm):
        geometric_inverse([Polynomial.constant(2), -one], 3)
    with pytest.raises(BadConstantTerm):
        geometric_inverse([one + x], 3)
    with pytest.raises(BadConstantTerm):
        geometric_inverse([], 3)


def test_negative_order_rejected():
    with pytest.raises(NegativeOrder):
        geometric_inverse([one], -1)
    with pytest.raises(NegativeOrder):
        multinomial_inverse([one], -2)


def test_multinomial_single_term_reduces_to_geometric_series():
    assert multinomial_inverse([one, -one], 3) == consts(1, 1, 1, 1)


def test_multinomial_matches_geometric_on_fibonacci_denominator():
    B = [one, -x, -one]
    assert multinomial_inverse(B, 3) == geometric_inverse(B, 3)


def test_multinomial_catalan_denominator():
    got = multinomial_inverse([one, -one, x], 2)
    assert got == SeriesPrefix([one, one, one - x])
    assert got == geometric_inverse([one, -one, x], 2)


def test_multinomial_rejects_bad_constant_term():
    with pytest.raises(BadConstantTerm):
        multinomial_inverse([x], 2)


def test_inversion_correctness_randomized():
    # B * (1/B) = 1 exactly, for random admissible denominators
    rng = random.Random(2718)
    for _ in range(60):
        B = random_denominator(rng)
        N = rng.randint(0, 10)
        inv = geometric_inverse(B, N)
        b_series = SeriesPrefix.from_polynomials(B, N)
        assert cauchy_mul(b_series, inv) == SeriesPrefix.identity(N)


def test_oracle_agreement_randomized():
    rng = random.Random(1618)
    for _ in range(40):
        B = random_denominator(rng, max_n=4)
        N = rng.randint(0, 12)
        assert multinomial_inverse(B, N) == geometric_inverse(B, N)


def test_truncation_consistency():
    rng = random.Random(55)
    for _ in range(20):
        B = random_denominator(rng)
        N = rng.randint(0, 10)
        full = geometric_inverse(B, N)
        for M in range(N + 1):
            assert geometric_inverse(B, M) == full.truncate(M)


def test_truncate_cannot_extend():
    s = consts(1, 2)
    with pytest.raises(OrderMismatch):
        s.truncate(5)
