from decimal import Decimal as D
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apmath.rational import (
    ONE,
    ZERO,
    binomial,
    floor,
    parse_rational,
    pochhammer,
    rational_pow,
    to_decimal,
    to_float,
    to_fstring,
    trunc,
)

small = st.fractions(min_value=-50, max_value=50, max_denominator=60)


def test_normalization():
    assert F(2, 4) == F(1, 2)
    assert (F(1, -2).numerator, F(1, -2).denominator) == (-1, 2)
    assert F(1, 2) + F(1, 3) == F(5, 6)
    assert F(2, 3) / F(2, 3) == ONE
    assert ZERO == F(0, 1)


def test_parse():
    assert parse_rational("6/8") == F(3, 4)
    assert parse_rational("-17") == -17
    assert parse_rational("ff/10", 16) == F(255, 16)
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


def test_pow():
    assert rational_pow(F(2, 3), 0) == 1
    assert rational_pow(F(2, 3), -2) == F(9, 4)
    assert rational_pow(F(3, 5), 3) == F(27, 125)
    with pytest.raises(ValueError, match="too large"):
        rational_pow(F(1, 2), 2**31)


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(F(7, 3), 0) == 1
    assert binomial(F(1, 2), 2) == F(-1, 8)


def test_pochhammer():
    assert pochhammer(F(3, 7), 0) == 1
    assert pochhammer(1, 4) == 24
    assert pochhammer(F(1, 2), 2) == F(3, 4)


def test_floor_trunc():
    assert floor(F(-1, 2)) == -1
    assert trunc(F(-1, 2)) == 0
    assert floor(F(7, 2)) == 3
    assert floor(F(6)) == 6


def test_to_decimal():
    assert to_decimal(F(1, 2), 5).as_tuple() == D("0.50000").as_tuple()
    assert to_decimal(F(1, 3), 4) == D("0.3333")
    assert to_decimal(F(7153, 524288), 10) == D("0.01364326477")


def test_text_forms():
    assert str(F(4, 2)) == "2" and str(F(-3, 9)) == "-1/3"
    assert to_fstring(F(2, 3), 4) == "0.6666"
    assert to_fstring(F(-2, 3), 4) == "-0.6666"
    assert to_fstring(F(5), 4) == "5"


def test_to_float_huge_parts():
    big = F(3 * 10**400, 10**400)
    assert to_float(big) == 3.0


@given(small, small, small)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    # Cross multiplication with positive denominators decides the order.
    assert (a < b) == (a.numerator * b.denominator < b.numerator * a.denominator)


@given(small)
def test_normalization_idempotent(a):
    again = F(a.numerator, a.denominator)
    assert (again.numerator, again.denominator) == (a.numerator, a.denominator)
    assert a.denominator > 0


@given(small, st.integers(min_value=0, max_value=12))
def test_pochhammer_step(a, n):
    assert pochhammer(a, n + 1) == pochhammer(a, n) * (a + n)
