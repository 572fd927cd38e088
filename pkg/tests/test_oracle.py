"""The reference implementations agree with mpmath far beyond the compared digits."""

from fractions import Fraction

import mpmath
import pytest

import oracle

TOL = mpmath.mpf(10) ** -95


@pytest.fixture(autouse=True)
def _dps():
    with mpmath.workdps(120):
        yield


def mp(q: Fraction):
    return mpmath.mpf(q.numerator) / q.denominator


ARGS = [Fraction(37, 10), Fraction(-123, 100), Fraction(1, 7), Fraction(19, 2)]


def test_constants():
    assert abs(mp(oracle.pi()) - mpmath.pi) < TOL
    assert abs(mp(oracle.e()) - mpmath.e) < TOL
    assert abs(mp(oracle.ln2()) - mpmath.log(2)) < TOL
    assert abs(mp(oracle.euler_gamma()) - mpmath.euler) < TOL


@pytest.mark.parametrize("x", ARGS)
@pytest.mark.parametrize(
    "name, ref",
    [
        ("exp", mpmath.exp),
        ("sin", mpmath.sin),
        ("cos", mpmath.cos),
        ("tan", mpmath.tan),
        ("atan", mpmath.atan),
        ("sinh", mpmath.sinh),
        ("cosh", mpmath.cosh),
        ("tanh", mpmath.tanh),
        ("asinh", mpmath.asinh),
        ("gamma", mpmath.gamma),
        ("cbrt", lambda v: mpmath.sign(v) * mpmath.cbrt(abs(v))),
    ],
)
def test_functions(name, ref, x):
    expected = ref(mp(x))
    assert abs(mp(getattr(oracle, name)(x)) - expected) <= TOL * max(1, abs(expected))


@pytest.mark.parametrize("x", [Fraction(1, 1000), Fraction(9, 10), Fraction(3), Fraction(12345, 7)])
def test_positive_functions(x):
    v = mp(x)
    assert abs(mp(oracle.log(x)) - mpmath.log(v)) < TOL
    assert abs(mp(oracle.sqrt(x)) - mpmath.sqrt(v)) < TOL
    assert abs(mp(oracle.root(5, x)) - mpmath.root(v, 5)) < TOL
    if x >= 1:
        assert abs(mp(oracle.acosh(x)) - mpmath.acosh(v)) < TOL


@pytest.mark.parametrize("x", [Fraction(-1), Fraction(-3, 4), Fraction(1, 3), Fraction(99, 100), Fraction(1)])
def test_asin(x):
    assert abs(mp(oracle.asin(x)) - mpmath.asin(mp(x))) < TOL


@pytest.mark.parametrize("s", [2, 3, 5, 7, 9, 20, 41])
def test_zeta(s):
    assert abs(mp(oracle.zeta(s)) - mpmath.zeta(s)) < TOL


def test_bernoulli_agree():
    for n in range(0, 31):
        assert oracle.bernoulli_double_sum(n) == oracle.bernoulli_at(n) == Fraction(mpmath.bernfrac(n)[0], mpmath.bernfrac(n)[1])


def test_ulps():
    from decimal import Decimal

    assert oracle.ulps(Decimal("1.23"), Fraction(1242, 1000)) == 1
    assert oracle.ulps(Decimal("1.23"), Fraction(12346, 10000)) == 0
    assert oracle.ulps_exact(Decimal("1.23"), Fraction(12346, 10000)) == Fraction(46, 100)
