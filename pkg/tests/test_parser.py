"""Expression parsing, canonical formatting, and the t-split."""

import random
import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_poly
from ratgen.errors import ExponentTooLarge, NegativeExponent, ParseError
from ratgen.parser import format_poly, join_in_t, parse_poly, split_in_t
from ratgen.poly import Polynomial

x = Polynomial.variable("x")
one = Polynomial.one()
zero = Polynomial.zero()


def tvar(exp: int = 1) -> Polynomial:
    return Polynomial._raw({(("t", exp),): 1})


def test_parse_fibonacci_denominator():
    p = parse_poly("1 - x*t - t^2")
    assert split_in_t(p) == (one, -x, -one)


def test_parse_zero():
    assert parse_poly("0") == zero
    assert parse_poly("x - x") == zero


def test_parse_negative_exponent():
    with pytest.raises(NegativeExponent):
        parse_poly("t^-1")


def test_parse_exponent_too_large():
    with pytest.raises(ExponentTooLarge):
        parse_poly("x^65537")
    assert parse_poly("x^3", max_exponent=3) == x**3
    with pytest.raises(ExponentTooLarge):
        parse_poly("x^4", max_exponent=3)


def test_parse_precedence():
    assert parse_poly("1 + 2*3") == Polynomial.constant(7)
    assert parse_poly("(1 + 2)*3") == Polynomial.constant(9)
    assert parse_poly("2*x^2") == Polynomial.term(2, {"x": 2})
    assert parse_poly("(x + 1)^2") == x**2 + Polynomial.term(2, {"x": 1}) + one


def test_unary_minus_binds_looser_than_exponent():
    assert parse_poly("-x^2") == -(x**2)
    assert parse_poly("(-x)^2") == x**2
    assert parse_poly("--x") == x
    assert parse_poly("1 - -x") == one + x


def test_parse_requires_explicit_multiplication():
    # "xt" is one identifier, not x*t
    p = parse_poly("xt")
    assert p.variables() == frozenset({"xt"})
    with pytest.raises(ParseError):
        parse_poly("2x")


def test_parse_error_positions():
    with pytest.raises(ParseError) as info:
        parse_poly("x + ")
    assert info.value.position == 4
    with pytest.raises(ParseError) as info:
        parse_poly("x $ y")
    assert info.value.position == 2
    with pytest.raises(ParseError) as info:
        parse_poly("(x + 1")
    assert info.value.position == 6


def test_parse_rejects_garbage():
    for bad in ("", "*x", "x*", "x^", "x^y", "()", "x + + y", "_x", "x!"):
        with pytest.raises(ParseError):
            parse_poly(bad)


def test_parse_big_integer_literal():
    big = 10**40
    assert parse_poly(str(big)) == Polynomial.constant(big)


def test_format_examples():
    assert format_poly(x**2 + one) == "x^2 + 1"
    assert format_poly(zero) == "0"
    assert format_poly(-one) == "-1"
    assert format_poly(-x) == "-x"
    assert format_poly(one - x) == "-x + 1"
    assert format_poly(Polynomial.term(2, {"x": 1})) == "2*x"
    assert format_poly(Polynomial.term(-3, {"x": 2, "y": 1})) == "-3*x^2*y"


def test_format_graded_lex_order():
    y = Polynomial.variable("y")
    p = one + x**2 + x * y + y**2 + x
    assert format_poly(p) == "x^2 + x*y + y^2 + x + 1"


def test_round_trip_fixed_cases():
    for src in ("0", "1", "-1", "x", "-x", "x^2 + 1", "2*x - 3",
                "x^2*y - y^2 + 7", "-x^3 + x - 1"):
        p = parse_poly(src)
        assert format_poly(p) == src
        assert parse_poly(format_poly(p)) == p


def test_round_trip_randomized():
    rng = random.Random(60221)
    for _ in range(400):
        p = random_poly(
            rng,
            variables=("x", "y", "z", "t"),
            max_terms=5,
            max_degree=6,
            coeff_bound=99,
        )
        assert parse_poly(format_poly(p)) == p


@settings(max_examples=300)
@given(st.text(alphabet=string.printable, max_size=40))
def test_parser_totality_on_fuzzed_input(src):
    # every input yields a polynomial or a positioned error, never a crash
    try:
        parse_poly(src)
    except ParseError as exc:
        assert isinstance(exc.position, int)


def test_split_t_alone():
    assert split_in_t(tvar()) == (zero, one)


def test_split_pell_lucas_numerator():
    p = parse_poly("2*x + 2*t")
    assert split_in_t(p) == (Polynomial.term(2, {"x": 1}), Polynomial.constant(2))


def test_split_zero():
    assert split_in_t(zero) == (zero,)


def test_split_skips_missing_orders():
    p = parse_poly("t^3 - x")
    assert split_in_t(p) == (-x, zero, zero, one)


def test_split_join_inverse():
    rng = random.Random(31415)
    for _ in range(200):
        p = random_poly(
            rng, variables=("x", "y", "t"), max_terms=4, max_degree=4
        )
        parts = split_in_t(p)
        assert join_in_t(parts) == p
        assert all(not q.mentions("t") for q in parts)


def test_join_split_inverse_on_coefficient_lists():
    rng = random.Random(92653)
    for _ in range(100):
        parts = [random_poly(rng) for _ in range(rng.randint(1, 4))]
        while len(parts) > 1 and parts[-1].is_zero():
            parts.pop()
        assert split_in_t(join_in_t(parts)) == tuple(parts)
