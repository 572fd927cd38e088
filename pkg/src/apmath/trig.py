"""Circular functions and their range reductions.

sin and cos fold the reduced argument into [0, pi/4] before summing a
Taylor series.  tan and cot use Bernoulli-number series, asin and atan
switch between expansions around 0, 1 and infinity.
"""

from __future__ import annotations

from decimal import Decimal

from .constants import pi
from .core import (
    EST,
    EXACT,
    ONE,
    ZERO,
    as_decimal,
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
    round_to,
    scale_prec,
    subtract_round,
    to_float,
    ulp_estimate,
)
from .elementary import hypot, sqrt
from .errors import DomainError, PoleError
from .sequences import bernoulli

__all__ = ["asin", "atan", "cos", "cot", "mod2pi", "modpi", "sin", "tan"]


def _half(x: Decimal) -> Decimal:
    """``x / 2``, exactly."""
    return context(precision(x) + 2).divide(x, 2)


def _zero_like(x: Decimal) -> Decimal:
    return Decimal((0, (0,), exponent(x)))


def _reduced(res: Decimal, x: Decimal) -> Decimal:
    """Round a reduced argument to the absolute accuracy of ``x``."""
    if res == 0:
        return _zero_like(x)
    digits = err2prec(estimate(res), ulp_estimate(x) / 2)
    if digits < 1:
        # |res| is below the uncertainty of x.
        return _zero_like(x)
    return round_to(res, digits)


@exact
def mod2pi(x) -> Decimal:
    """``x`` reduced into ``[0, 2 pi)``, accurate to the ulp of ``x``."""
    x = as_decimal(x)
    to_float(x)
    k = int(0.5 * estimate(x) / EST.pi)
    # err(2 pi k) must stay below err(x) / 2, with two guard digits.
    err2pi = 0.25 * abs(ulp_estimate(x) / k) if k else 0.5 * ulp_estimate(x)
    twopi = pi(2 + err2prec(6.283, err2pi)) * 2
    res = EXACT.remainder(x, twopi)
    if res < 0:
        res += twopi
    return _reduced(res, x)


@exact
def modpi(x) -> Decimal:
    """``x`` reduced modulo pi into ``[-pi/2, pi/2]``."""
    x = as_decimal(x)
    to_float(x)
    k = int(estimate(x) / EST.pi)
    errpi = 0.5 * abs(ulp_estimate(x) / k) if k else 0.5 * ulp_estimate(x)
    onepi = pi(2 + err2prec(3.1416, errpi))
    pihalf = _half(onepi)
    res = EXACT.remainder(x, onepi)
    if res > pihalf:
        res -= onepi
    elif res < -pihalf:
        res += onepi
    return _reduced(res, x)


def _pi_for(x: Decimal) -> Decimal:
    """pi accurate enough to fold an argument with the ulp of ``x``."""
    return pi(2 + err2prec(3.14159, 0.5 * ulp_estimate(x)))


@exact
def sin(x) -> Decimal:
    """Sine, evaluated with two guard digits so the reduction error stays hidden."""
    x = as_decimal(x)
    if x < 0:
        return -sin(-x)
    if x == 0:
        return ZERO
    return guarded(_sin, x)


def _sin(x: Decimal) -> Decimal:
    res = mod2pi(x)
    p = _pi_for(x)
    if res > p:
        return -_sin(subtract_round(res, p))
    if 2 * res > p:
        return _sin(subtract_round(p, res))
    if 4 * res > p:
        return _cos(subtract_round(_half(p), res))
    if res <= 0:
        return _zero_like(res)

    # Taylor series; about k terms push res**(2k+1) below the ulp.
    res_est = estimate(res)
    res_ulp = ulp_estimate(res)
    k = max(1, abs(jint(precision(res) / EST.log10(1 / res_est)) // 2))
    tay_digits = err2prec(res_est, res_ulp / k)
    result = res
    xpowi = res
    ifac = 1
    i = 1
    while True:
        ifac *= 2 * i * (2 * i + 1)
        xpowi = -xpowi * res * res
        corr = divide(xpowi, ifac, tay_digits)
        result += corr
        if abs(estimate(corr)) < 0.5 * res_ulp:
            break
        i += 1
    return round_to(result, precision(res))


@exact
def cos(x) -> Decimal:
    x = as_decimal(x)
    if x < 0:
        return cos(-x)
    if x == 0:
        return ONE
    return guarded(_cos, x)


def _cos(x: Decimal) -> Decimal:
    res = mod2pi(x)
    p = _pi_for(x)
    if res > p:
        return -_cos(subtract_round(res, p))
    if 2 * res > p:
        return -_cos(subtract_round(p, res))
    if 4 * res > p:
        return _sin(subtract_round(_half(p), res))
    if res <= 0:
        return scale_prec(ONE, max(0, -exponent(res)))

    # The error of x**2/2 sets the absolute error of the result.
    res_est = estimate(res)
    x_ulp = 0.5 * ulp_estimate(res) * res_est
    k = max(1, abs(jint(EST.ln(x_ulp) / EST.ln(res_est)) // 2))
    tay_digits = err2prec(1, x_ulp / k)
    result = ONE
    xpowi = ONE
    ifac = 1
    i = 1
    while True:
        ifac *= (2 * i - 1) * (2 * i)
        xpowi = -xpowi * res * res
        corr = divide(xpowi, ifac, tay_digits)
        result += corr
        if abs(estimate(corr)) < 0.5 * x_ulp:
            break
        i += 1
    return round_to(result, err2prec(estimate(result), x_ulp))


@exact
def tan(x) -> Decimal:
    """Tangent: ``sum 4**k (4**k - 1) |B_2k| x**(2k-1) / (2k)!`` or ``1/cot``."""
    x = as_decimal(x)
    if x == 0:
        return ZERO
    if x < 0:
        return -tan(-x)
    return guarded(_tan, x)


def _tan(x: Decimal) -> Decimal:
    res = modpi(x)
    res_est = estimate(res)
    eps = ulp_estimate(x) / 4 / EST.cos(res_est) ** 2

    # Away from zero the series converges slowly; go through cot instead.
    if abs(res_est) > 0.8:
        co = _cot(x)
        return divide(ONE, co, err2prec(1 / estimate(co), eps))

    xh = scale_prec(res, 2)
    xh2 = multiply_round(xh, xh)
    result = xh
    xpowi = xh
    fourn = 4
    fac = 2
    i = 2
    while True:
        f = abs(bernoulli(2 * i))
        fourn <<= 2
        fac *= 2 * i * (2 * i - 1)
        f = f * fourn * (fourn - 1) / fac
        xpowi = multiply_round(xpowi, xh2)
        c = multiply_round(xpowi, f)
        result += c
        if abs(estimate(c)) < 0.1 * eps:
            break
        i += 1
    return round_to(result, err2prec(estimate(result), eps))


@exact
def cot(x) -> Decimal:
    """Cotangent: ``1/x - sum 4**k |B_2k| x**(2k-1) / (2k)!``."""
    x = as_decimal(x)
    if x == 0:
        raise PoleError(f"Cannot take cot of zero {x}")
    if x < 0:
        return -cot(-x)
    return guarded(_cot, x)


def _cot(x: Decimal) -> Decimal:
    res = modpi(x)
    if res == 0:
        raise PoleError(f"Cannot take cot of a multiple of pi {x}")
    res_est = estimate(res)
    eps = ulp_estimate(x) / 4 / EST.sin(res_est) ** 2

    xh = scale_prec(res, 2)
    xh2 = multiply_round(xh, xh)
    # Digits of the leading 1/x term follow from its own size.
    result = divide(ONE, xh, err2prec(1 / estimate(xh), eps))
    xpowi = xh
    fourn = 4
    fac = 1
    i = 1
    while True:
        fac *= 2 * i * (2 * i - 1)
        f = bernoulli(2 * i) * fourn / fac
        c = multiply_round(xpowi, f)
        if i % 2 == 0:
            result += c
        else:
            result -= c
        if abs(estimate(c)) < 0.1 * eps:
            break
        fourn <<= 2
        xpowi = multiply_round(xpowi, xh2)
        i += 1
    return round_to(result, err2prec(estimate(result), eps))


@exact
def asin(x) -> Decimal:
    """Inverse sine; arguments above 0.7 expand around 1 instead of 0."""
    x = as_decimal(x)
    if x > 1 or x < -1:
        raise DomainError(f"Out of range argument {x} of asin")
    if x == 0:
        return ZERO
    if x == 1:
        return _half(pi(err2prec(3.14159, EST.sqrt(ulp_estimate(x)))))
    if x < 0:
        return -asin(-x)

    x_est = estimate(x)
    half_ulp = ulp_estimate(x) / 2
    eps = half_ulp / 2 / EST.sqrt(1 - x_est**2)

    if x_est > 0.7:
        # asin x = pi/2 - sqrt(2 z) sum (2i-1)!! / (i! (2i+1)) (z/4)**i with z = 1 - x.
        xh = scale_prec(ONE - x, 3)
        v = divide_round(xh, 4)
        result = ONE
        xpowi = ONE
        ifac_n = 1
        ifac_d = 1
        i = 1
        while True:
            ifac_n *= 2 * i - 1
            ifac_d *= i
            xpowi = v if i == 1 else multiply_round(xpowi, v)
            c = divide_round(multiply_round(xpowi, ifac_n), ifac_d * (2 * i + 1))
            result += c
            if abs(estimate(c)) < half_ulp / 120:
                break
            i += 1
        result = multiply_round(sqrt(xh * 2), result)
        pihalf = _half(pi(precision(result)))
        return round_to(pihalf - result, err2prec(estimate(result), eps))

    xh = scale_prec(x, 2)
    xh2 = multiply_round(xh, xh)
    result = xh
    xpowi = xh
    ifac_n = 1
    ifac_d = 1
    i = 1
    while True:
        ifac_n *= 2 * i - 1
        ifac_d *= 2 * i
        xpowi = multiply_round(xpowi, xh2)
        c = divide_round(multiply_round(xpowi, ifac_n), ifac_d * (2 * i + 1))
        result += c
        if abs(estimate(c)) < 0.1 * eps:
            break
        i += 1
    return round_to(result, err2prec(estimate(result), eps))


@exact
def atan(x) -> Decimal:
    """Inverse tangent in ``(-pi/2, pi/2)``.

    Between 0.7 and 3 the argument is mapped by the half-angle formula
    ``atan x = 2 atan((sqrt(1 + x**2) - 1) / x)``; above 3 the expansion
    around infinity is used.
    """
    x = as_decimal(x)
    if x < 0:
        return -atan(-x)
    if x == 0:
        return ZERO

    x_est = estimate(x)
    # Absolute error err(x) / (1 + x**2), written as in the half-angle map.
    eps = ulp_estimate(x) / (2 * EST.hypot(1, x_est))

    if 0.7 < x_est < 3:
        y = scale_prec(x, 2)
        newx = divide_round(hypot(1, y) - ONE, y)
        result = multiply_round(atan(newx), 2)
        return round_to(result, err2prec(estimate(result), eps))

    if x_est < 0.71:
        xh = scale_prec(x, 2)
        xh2 = -multiply_round(xh, xh)
        result = xh
        xpowi = xh
        i = 1
        while True:
            xpowi = multiply_round(xpowi, xh2)
            c = divide_round(xpowi, 2 * i + 1)
            result += c
            if abs(estimate(c)) < 0.1 * eps:
                break
            i += 1
        return round_to(result, err2prec(estimate(result), eps))

    result = _half(pi(2 + err2prec(3.1416, eps)))
    xh = divide_round(-1, scale_prec(x, 2))
    xh2 = -multiply_round(xh, xh)
    xpowi = xh
    i = 0
    while True:
        c = divide_round(xpowi, 2 * i + 1)
        result += c
        if abs(estimate(c)) < 0.1 * eps:
            break
        xpowi = multiply_round(xpowi, xh2)
        i += 1
    return round_to(result, err2prec(estimate(result), eps))
