from decimal import Decimal as D
from fractions import Fraction as F

import pytest

import oracle
from apmath import DomainError, PoleError, RangeError, pi
from apmath.core import add_round, divide_round, multiply_round, precision, scale_prec
from apmath.trig import asin, atan, cos, cot, mod2pi, modpi, sin, tan


def pad(text: str, digits: int = 25) -> D:
    x = D(text)
    return scale_prec(x, max(0, digits - precision(x)))


def close(value: D, reference, ulps=2) -> bool:
    return oracle.ulps(value, F(reference)) <= ulps


def within(a: D, b, ulps=4) -> bool:
    """|a - b| in ulps of the coarser operand."""
    exp = a.as_tuple().exponent
    if isinstance(b, D):
        exp = max(exp, b.as_tuple().exponent)
    return abs(a - b) <= ulps * D(10) ** exp


GRID = ["0.1", "0.5", "1", "2", "3", "5", "7"]


class TestReduction:
    def test_zero(self):
        assert mod2pi(D("0.00000")) == 0

    def test_examples(self):
        assert close(mod2pi(D("7.0000000000000000")), 7 - 2 * oracle.pi())
        assert close(modpi(D("3.0000000000000000")), 3 - oracle.pi())
        assert str(mod2pi(D("7.0000000000000000"))).startswith("0.71681469282041")
        assert str(modpi(D("3.0000000000000000"))).startswith("-0.14159265358979")

    @pytest.mark.parametrize("text", ["-100.5", "-3", "0.5", "6.3", "1000.25", "123456.789"])
    def test_ranges(self, text):
        x = pad(text, 30)
        r2 = mod2pi(x)
        r1 = modpi(x)
        p = pi(40)
        assert 0 <= r2 < 2 * p
        assert -p / 2 <= r1 <= p / 2

    def test_huge_argument(self):
        with pytest.raises(RangeError):
            mod2pi(D("1E+400"))


class TestSinCos:
    def test_zero(self):
        assert sin(D(0)) == 0
        assert cos(D(0)) == 1

    def test_examples(self):
        assert close(sin(D("0.52359877559829887308")), F(1, 2))
        assert close(cos(D("1.0471975511965977462")), F(1, 2))

    @pytest.mark.parametrize("text", GRID)
    def test_symmetry(self, text):
        x = pad(text)
        assert sin(-x) == -sin(x)
        assert cos(-x) == cos(x)

    @pytest.mark.parametrize("text", GRID + ["-12.5", "100.125", "-401.2914494276714", "797.4957837235456"])
    def test_against_oracle(self, text):
        x = pad(text, 30)
        assert close(sin(x), oracle.sin(F(x)))
        assert close(cos(x), oracle.cos(F(x)))

    @pytest.mark.parametrize("text", GRID)
    def test_pythagoras(self, text):
        x = pad(text)
        s, c = sin(x), cos(x)
        assert within(add_round(multiply_round(s, s), multiply_round(c, c)), 1)


class TestTanCot:
    def test_zero(self):
        assert tan(D(0)) == 0

    def test_examples(self):
        assert close(tan(D("0.78539816339744830962")), 1)
        assert close(tan(D("1.0000000000000000")), D("1.5574077246549022"))

    def test_exact_quotient_keeps_digits(self):
        assert str(tan(D("1.6705"))) == "-9.996"

    @pytest.mark.parametrize("text", ["0.1", "0.5", "0.79", "0.81", "1", "1.5", "2", "3", "-4.4"])
    def test_against_oracle(self, text):
        x = pad(text, 30)
        assert close(tan(x), oracle.tan(F(x)))
        assert close(cot(x), oracle.cot(F(x)))

    @pytest.mark.parametrize("text", ["0.1", "0.5", "1", "2", "3", "5", "7"])
    def test_matches_quotient(self, text):
        x = pad(text)
        assert within(tan(x), divide_round(sin(x), cos(x)))

    @pytest.mark.parametrize("text", ["0.3", "0.7", "1.0", "1.4"])
    def test_product(self, text):
        x = pad(text)
        assert within(multiply_round(tan(x), cot(x)), 1)

    def test_poles(self):
        with pytest.raises(PoleError, match="cot of zero"):
            cot(D("0"))
        with pytest.raises(PoleError):
            cot(D("0.000"))
        # The reduced argument is below the uncertainty of x.
        with pytest.raises(PoleError):
            cot(D("3.14159265359"))

    def test_near_pole_is_finite(self):
        x = pi(10)
        assert close(cot(x), oracle.cot(F(x)))


class TestInverse:
    def test_asin_examples(self):
        assert asin(D(0)) == 0
        assert close(asin(D("0.50000000000000000000")), oracle.pi() / 6)

    def test_asin_one(self):
        # pi/2 at the precision sqrt(ulp) allows: about half the digits.
        value = asin(D("1.0000000000"))
        assert abs(value - D("1.570796327")) < D("5e-6")
        assert value == -asin(D("-1.0000000000"))

    @pytest.mark.parametrize("text", ["-0.95", "-0.3", "0.001", "0.69", "0.71", "0.9", "0.999"])
    def test_asin_against_oracle(self, text):
        x = pad(text, 30)
        assert close(asin(x), oracle.asin(F(x)))

    def test_asin_domain(self):
        with pytest.raises(DomainError, match="Out of range"):
            asin(D("2"))
        with pytest.raises(DomainError):
            asin(D("-1.0001"))

    def test_atan_examples(self):
        assert atan(D(0)) == 0
        assert close(atan(D("1.0000000000000000")), oracle.pi() / 4)
        assert close(atan(D("10.000000000000000")), D("1.4711276743037346"))

    @pytest.mark.parametrize("text", ["0.05", "0.69", "0.705", "0.7", "0.71", "1.5", "2.99", "3.01", "250", "-8"])
    def test_atan_against_oracle(self, text):
        x = pad(text, 30)
        assert close(atan(x), oracle.atan(F(x)))

    @pytest.mark.parametrize("text", ["0.05", "0.4", "0.9", "1.2", "1.4"])
    def test_round_trips(self, text):
        x = pad(text)
        assert within(asin(sin(x)), x)
        assert within(atan(tan(x)), x)
