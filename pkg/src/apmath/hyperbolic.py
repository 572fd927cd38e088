"""Hyperbolic functions and their inverses."""

from __future__ import annotations

from decimal import Decimal

from .core import (
    EST,
    ONE,
    ZERO,
    as_decimal,
    context,
    divide,
    err2prec,
    estimate,
    exact,
    guarded,
    jint,
    precision,
    round_to,
    scale_prec,
    ulp_estimate,
)
from .elementary import exp, hypot, log, sqrt
from .errors import DomainError

__all__ = ["acosh", "asinh", "cosh", "sinh", "tanh"]


@exact
def cosh(x) -> Decimal:
    """Hyperbolic cosine; ``hypot(1, sinh x)`` above 1.5, Taylor series below."""
    x = as_decimal(x)
    if x < 0:
        # Even function: the negated argument goes back through cosh.
        return cosh(-x)
    if x == 0:
        return ONE
    return guarded(_cosh, x)


def _cosh(x: Decimal) -> Decimal:
    if estimate(x) > 1.5:
        return hypot(1, _sinh(x))
    return _cosh_taylor(x)


def _term_count(num, den, x: Decimal) -> int:
    """Rough Taylor term count ``|num / den| / 2``, used to split the error budget.

    ``den`` is a logarithm of the argument and vanishes at 1; the digit
    count of ``x`` is a safe overestimate there.
    """
    if den == 0:
        return precision(x)
    return max(1, abs(jint(num / den)) // 2)


def _cosh_taylor(x: Decimal) -> Decimal:
    xh = scale_prec(x, 2)
    x_est = estimate(x)
    # The error of x**2/2 is the absolute error of the result.
    x_ulp = 0.5 * ulp_estimate(x) * x_est
    k = _term_count(EST.ln(x_ulp), EST.ln(x_est), x)
    tay_digits = err2prec(1, x_ulp / k)
    result = ONE
    xpowi = ONE
    ifac = 1
    i = 1
    while True:
        ifac *= (2 * i - 1) * (2 * i)
        xpowi = xpowi * xh * xh
        corr = divide(xpowi, ifac, tay_digits)
        result += corr
        if abs(estimate(corr)) < 0.5 * x_ulp:
            break
        i += 1
    return round_to(result, err2prec(estimate(result), x_ulp))


@exact
def sinh(x) -> Decimal:
    """Hyperbolic sine; above 2.4 via ``sinh 2y = 2 sinh y cosh y``."""
    x = as_decimal(x)
    if x < 0:
        return -sinh(-x)
    if x == 0:
        return ZERO
    return guarded(_sinh, x)


def _sinh(x: Decimal) -> Decimal:
    x_est = estimate(x)
    if x_est > 2.4:
        # One more digit per level keeps the doubling from compounding
        # each level's rounding.
        xhalf = scale_prec(context(precision(x) + 2).divide(x, 2), 1)
        s = _sinh(xhalf)
        # Same value cosh(xhalf) would compute, without a second sinh call.
        c = hypot(1, s) if estimate(xhalf) > 1.5 else _cosh_taylor(xhalf)
        result = s * c * 2
        # Relative error err(x) coth(x).
        return round_to(result, err2prec(0.5 * ulp_estimate(x) / EST.tanh(x_est)))

    xh = scale_prec(x, 2)
    x_ulp = ulp_estimate(x)
    k = _term_count(precision(x), EST.log10(1 / x_est), x)
    tay_digits = err2prec(x_est, x_ulp / k)
    result = xh
    xpowi = xh
    ifac = 1
    i = 1
    while True:
        ifac *= (2 * i) * (2 * i + 1)
        xpowi = xpowi * xh * xh
        corr = divide(xpowi, ifac, tay_digits)
        result += corr
        if abs(estimate(corr)) < 0.5 * x_ulp:
            break
        i += 1
    return round_to(result, precision(x))


@exact
def tanh(x) -> Decimal:
    """``(1 - exp(-2x)) / (1 + exp(-2x))`` with two guard digits."""
    x = as_decimal(x)
    if x < 0:
        return -tanh(-x)
    if x == 0:
        return ZERO
    x_est = estimate(x)
    e2x = exp(scale_prec(x, 2) * -2)
    # err(x) / cosh(x)**2
    eps = 0.5 * ulp_estimate(x) / EST.cosh(x_est) ** 2
    return divide(ONE - e2x, ONE + e2x, err2prec(EST.tanh(x_est), eps))


@exact
def asinh(x) -> Decimal:
    """``log(x + hypot(1, x))``."""
    x = as_decimal(x)
    if x == 0:
        return ZERO
    if x < 0:
        # Odd symmetry avoids cancellation in x + hypot(1, x).
        return -asinh(-x)
    xh = scale_prec(x, 2)
    result = log(hypot(1, xh) + xh)
    eps = 0.5 * ulp_estimate(x) / EST.hypot(1, estimate(x))
    return round_to(result, err2prec(estimate(result), eps))


@exact
def acosh(x) -> Decimal:
    """``log(x + sqrt(x**2 - 1))`` for ``x >= 1``."""
    x = as_decimal(x)
    if x < 1:
        raise DomainError(f"Out of range argument cosh {x}")
    if x == 1:
        return ZERO
    xh = scale_prec(x, 2)
    result = log(sqrt(xh * xh - ONE) + xh)
    x_est = estimate(x)
    eps = 0.5 * ulp_estimate(x) / EST.sqrt(x_est * x_est - 1)
    return round_to(result, err2prec(estimate(result), eps))
