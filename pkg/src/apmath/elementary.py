"""Roots, hypotenuse, exponential, logarithms and general powers.

Each function takes the precision of its result from the precision of its
argument.  Pad an argument with :func:`~apmath.core.scale_prec` to get more
digits out.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction

from .constants import log2_const
from .core import (
    EST,
    ONE,
    ZERO,
    as_decimal,
    as_spec,
    context,
    divide,
    divide_round,
    err2prec,
    estimate,
    exact,
    exponent,
    guarded,
    jint,
    multiply_round,
    precision,
    prec2err_estimate,
    round_to,
    scale_prec,
    to_float,
    ulp,
    ulp_estimate,
)
from .errors import DomainError
from .rational import to_decimal

__all__ = [
    "TAYLOR_NTERM",
    "cbrt",
    "exp",
    "hypot",
    "log",
    "log_int",
    "log_rational",
    "pow",
    "root",
    "sqrt",
]

# Taylor terms summed by exp before it rescales the argument instead.
TAYLOR_NTERM = 8

# N (N-1) (N-2): the bound on x**N that keeps N Taylor terms sufficient.
_TAYLOR_BOUND = TAYLOR_NTERM * (TAYLOR_NTERM - 1) * (TAYLOR_NTERM - 2)


@exact
def root(n: int, x) -> Decimal:
    """``x**(1/n)`` by Newton iteration from a double-precision seed."""
    x = as_decimal(x)
    if x < 0:
        raise DomainError(f"negative argument {x} of root")
    if n <= 0:
        raise DomainError(f"negative power {n} of root")
    if n == 1 or x == 0:
        return x

    s = Decimal(to_float(x) ** (1.0 / n))
    xhighpr = scale_prec(x, 2)
    digits = 2 + precision(x)
    eps = ulp_estimate(x) / (2 * n * estimate(x))
    while True:
        c = divide(xhighpr, s ** (n - 1), digits)
        c = s - c
        c = divide(c, n, precision(c))
        s -= c
        if abs(estimate(c) / estimate(s)) < eps:
            break
    return round_to(s, err2prec(eps))


def sqrt(x) -> Decimal:
    x = as_decimal(x)
    if x < 0:
        raise DomainError(f"negative argument {x} of square root")
    return root(2, x)


def cbrt(x) -> Decimal:
    """Cube root carrying the sign of ``x``."""
    x = as_decimal(x)
    if x < 0:
        return -root(3, -x)
    return root(3, x)


@exact
def hypot(x, y) -> Decimal:
    """``sqrt(x**2 + y**2)``.

    With an ``int`` first argument that term is exact and only ``y``
    limits the precision.
    """
    if isinstance(x, int) and not isinstance(x, bool):
        return _hypot_int(x, as_decimal(y))
    x, y = as_decimal(x), as_decimal(y)
    z = x * x + y * y
    zerr = abs(x) * ulp(x) + abs(y) * ulp(y)
    if zerr == 0:
        # Both arguments are zeros; nothing to propagate.
        return abs(x) if exponent(x) >= exponent(y) else abs(y)
    z = sqrt(round_to(z, 2 + err2prec(z, zerr)))
    return round_to(z, err2prec(estimate(z), 0.5 * estimate(zerr) / estimate(z)))


def _hypot_int(n: int, x: Decimal) -> Decimal:
    z = Decimal(n) ** 2 + x * x
    zerr = estimate(x) * ulp_estimate(x)
    if zerr == 0:
        # x is an exact zero: the result is |n| with the digits x allows.
        result = Decimal(abs(n))
        return scale_prec(result, max(0, err2prec(n, ulp_estimate(x) / 2) - precision(result)))
    z = sqrt(round_to(z, 2 + err2prec(estimate(z), zerr)))
    return round_to(z, err2prec(estimate(z), 0.5 * zerr / estimate(z)))


@exact
def exp(x) -> Decimal:
    """``e**x``.

    Small arguments use at most :data:`TAYLOR_NTERM` Taylor terms.  Larger
    ones are divided by ``10**t``, exponentiated and raised back to the
    ``10**t`` power, which costs ``t`` digits.
    """
    x = as_decimal(x)
    if x == 0:
        return _exp(x)
    return guarded(_exp, x)


def _exp(x: Decimal) -> Decimal:
    if x < 0:
        inverse = _exp(-x)
        return divide(ONE, inverse, precision(inverse))
    if x == 0:
        # Zero keeps its scale; that scale is the accuracy of the result.
        return scale_prec(ONE, max(0, -exponent(x)))

    x_est = estimate(x)
    ulp_est = ulp_estimate(x)
    if x_est**TAYLOR_NTERM < _TAYLOR_BOUND * ulp_est:
        result = ONE
        xpowi = ONE
        ifac = 1
        tay_digits = err2prec(1, ulp_est / TAYLOR_NTERM)
        for i in range(1, TAYLOR_NTERM + 1):
            ifac *= i
            xpowi *= x
            c = divide(xpowi, ifac, tay_digits)
            result += c
            if abs(estimate(xpowi)) < i and abs(estimate(c)) < 0.5 * ulp_est:
                break
        # The absolute error of x is the relative error of exp(x).
        return round_to(result, err2prec(ulp_est / 2))

    # Smallest t that brings x / 10**t into the Taylor regime, at least 1.
    ex_sc = jint((1 - EST.log10(_TAYLOR_BOUND * ulp_est / x_est**TAYLOR_NTERM)) / (TAYLOR_NTERM - 1))
    ex_sc = max(1, ex_sc)
    result = _exp(x.scaleb(-ex_sc))
    # Each power of ten multiplies the relative error by ten.
    final_digits = precision(result) - ex_sc
    while ex_sc > 0:
        step = min(8, ex_sc)
        ex_sc -= step
        result = context(max(1, precision(result) - step + 2)).power(result, 10**step)
    return round_to(result, final_digits)


@exact
def log(x) -> Decimal:
    """Natural logarithm.

    Near 1 this sums the alternating series in ``x - 1``; elsewhere it
    uses ``log x = r log(x**(1/r))`` with ``r`` chosen to bring the root
    near 1.2.
    """
    x = as_decimal(x)
    if x < 0:
        raise DomainError(f"Cannot take log of negative {x}")
    if x == 0:
        raise DomainError("Cannot take log of zero")
    if x == ONE:
        return scale_prec(ZERO, precision(x) - 1)

    x_est = estimate(x)
    if abs(x_est - 1) <= 0.3:
        z = scale_prec(x - ONE, 2)
        zpown = z
        eps = 0.5 * ulp_estimate(x) / abs(x_est)
        result = z
        k = 2
        while True:
            zpown = multiply_round(zpown, z)
            c = divide_round(zpown, k)
            if k % 2 == 0:
                result -= c
            else:
                result += c
            if abs(estimate(c)) < eps:
                break
            k += 1
        return round_to(result, err2prec(estimate(result), eps))

    r = max(2, jint(EST.ln(x_est) / 0.2))
    result = log(root(r, scale_prec(x, 2))) * r
    # An absolute error in log x is the relative error of x.
    return round_to(result, err2prec(estimate(result), ulp_estimate(x) / x_est))


@exact
def log_int(n: int, spec) -> Decimal:
    """``ln n`` for a positive integer, with fast series for 2, 3, 5 and 7.

    ``ln 3 = (19 ln 2 + sum (-1)**(k+1) (7153/524288)**k / k) / 12``,
    ``ln 5 = (14 ln 2 - sum (759/16384)**k / k) / 6`` and
    ``ln 7 = 3 ln 2 - sum (1/8)**k / k``.
    """
    spec = as_spec(spec)
    digits = spec.digits
    if n <= 0:
        raise DomainError(f"Cannot take log of negative {n}")
    if n == 1:
        return ZERO
    if n == 2:
        return log2_const(spec)
    if n == 3:
        return _log_ladder(spec, rate=1.87, spread=0.693 / 1.098, multiplier=19,
                           value=1.098, ratio=Fraction(7153, 524288), alternate=True, divisor=12)
    if n == 5:
        return _log_ladder(spec, rate=1.33, spread=0.693 / 1.609, multiplier=14,
                           value=1.6, ratio=Fraction(759, 16384), alternate=False, divisor=6)
    if n == 7:
        return _log_ladder(spec, rate=0.903, spread=3 * 0.693 / 1.098, multiplier=3,
                           value=1.9, ratio=Fraction(1, 8), alternate=False, divisor=1)

    # Pad n so that the generic routine delivers the requested digits.
    eps = prec2err_estimate(EST.ln(n), digits) * n
    return log(scale_prec(Decimal(n), as_spec(1 + err2prec(n, eps))))


def _log_ladder(spec, *, rate, spread, multiplier, value, ratio, alternate, divisor):
    """``(multiplier ln 2 -+ sum ratio**k / k) / divisor`` at ``spec``."""
    digits = spec.digits
    # ratio**k falls by 10**-rate per term.
    kmax = max(1, jint(digits / rate))
    inner = digits + 1 + jint(EST.log10(kmax * spread))
    result = multiply_round(log2_const(inner), multiplier)
    eps = prec2err_estimate(value, digits) / kmax
    pk = ratio
    k = 1
    while True:
        tmp = pk / k
        size = estimate(tmp)
        if size < eps:
            break
        c = to_decimal(tmp, err2prec(size, eps))
        if alternate and k % 2 == 1:
            result += c
        else:
            result -= c
        pk *= ratio
        k += 1
    if divisor != 1:
        result = divide_round(result, divisor)
    return spec.context.plus(result)


@exact
def log_rational(r, spec) -> Decimal:
    """``ln r`` for a positive fraction, converted with just enough digits."""
    r = Fraction(r)
    spec = as_spec(spec)
    if r <= 0:
        raise DomainError(f"Cannot take log of negative {r}")
    if r == 1:
        return ZERO
    eps = prec2err_estimate(EST.ln(estimate(r)), spec.digits)
    return spec.context.plus(log(to_decimal(r, 1 + err2prec(eps))))


@exact
def pow(x, y) -> Decimal:
    """``x**y = exp(y log x)`` for ``x >= 0``.

    The relative error of the result is ``|log x| err(y) + |y| err(x) / x``.
    """
    x, y = as_decimal(x), as_decimal(y)
    if x < 0:
        raise DomainError(f"Cannot power negative {x}")
    if x == 0:
        return ZERO
    logx = log(x)
    result = exp(y * logx)
    err = abs(estimate(logx) * ulp_estimate(y) / 2) + abs(estimate(y) * ulp_estimate(x) / 2 / estimate(x))
    return round_to(result, err2prec(1, err))
