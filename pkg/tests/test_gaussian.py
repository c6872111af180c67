from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polardet.gaussian import (
    Gaussian,
    abs2,
    conj,
    exact_div,
    field_div,
    format_number,
    from_pair,
    gauss,
    parse_number,
    to_complex,
    to_pair,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**6)
numbers = st.builds(gauss, rationals, rationals)


def test_real_values_stay_plain():
    assert gauss(3) == 3 and type(gauss(3)) is int
    assert type(gauss(Fraction(4, 2))) is int
    assert type(gauss(Fraction(1, 2), 0)) is Fraction
    assert isinstance(gauss(1, 1), Gaussian)


def test_arithmetic_matches_complex():
    a, b = gauss(2, -1), gauss(-3, 4)
    assert to_complex(a * b) == complex(2, -1) * complex(-3, 4)
    assert a * conj(a) == abs2(a) == 5
    assert a + conj(a) == 4


def test_exact_div_refuses_remainders():
    assert exact_div(6, 3) == 2
    assert exact_div(gauss(1, 3), gauss(1, 1)) == gauss(2, 1)
    with pytest.raises(ArithmeticError):
        exact_div(7, 2)
    assert field_div(7, 2) == Fraction(7, 2)


@pytest.mark.parametrize("x, text", [(5, "5"), (Fraction(-3, 4), "-3/4"), (gauss(1, -2), "(1-2i)"),
                                     (gauss(Fraction(1, 2), 3), "(1/2+3i)")])
def test_format(x, text):
    assert format_number(x) == text
    assert parse_number(text) == x


@given(numbers)
def test_text_round_trip(x):
    assert parse_number(format_number(x)) == x


@given(numbers)
def test_pair_round_trip(x):
    assert from_pair(to_pair(x)) == x


@given(numbers, numbers.filter(lambda z: z != 0))
def test_field_div_inverts_mul(a, b):
    assert field_div(a * b, b) == a
