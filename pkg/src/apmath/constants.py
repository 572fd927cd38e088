"""Mathematical constants: pi, e, Euler's gamma and ln 2.

Requests below the tabulated precision round the stored digits.  Longer
requests are summed from series; pass ``use_table=False`` to force the
series path at any precision.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from typing import Sequence

from . import _tables
from .core import (
    EST,
    ONE,
    ZERO,
    as_spec,
    divide_round,
    err2prec,
    estimate,
    exact,
    jint,
    multiply_round,
    precision,
    prec2err_estimate,
    scale_prec,
)
from .rational import to_decimal

__all__ = ["E", "GAMMA", "LOG2", "PI", "bbp_ladder", "e", "euler_gamma", "log2_const", "pi"]

E = Decimal(_tables.E_DIGITS)
PI = Decimal(_tables.PI_DIGITS)
GAMMA = Decimal(_tables.GAMMA_DIGITS)
LOG2 = Decimal(_tables.LOG2_DIGITS)

_PI_LADDER = (1, 0, 0, -1, -1, -1, 0, 0)
_LOG2_LADDER = (2, -5, -2, -7, -2, -5, 2, -3)


def _from_table(table: Decimal, spec, use_table: bool):
    if use_table and spec.digits < precision(table):
        return spec.context.plus(table)
    return None


@exact
def bbp_ladder(n: int, p: int, a: Sequence[int], spec) -> Decimal:
    """Sum ``a[(k-1) % 8] / (k**n 2**floor(p (k+1) / 2))`` over ``k >= 1``.

    Terms are added exactly in blocks of eight and each block is converted
    to decimal with only the digits the error budget needs.
    """
    spec = as_spec(spec)
    if len(a) != 8:
        raise ValueError(f"ladder needs 8 coefficients, got {len(a)}")
    if not any(a):
        return ZERO

    # Magnitude from the first nine terms, then an absolute error budget per block.
    guess = EST.zero
    for k in range(1, 10):
        guess += EST.mpf(a[(k - 1) % 8]) / EST.mpf(k) ** n / EST.mpf(2) ** (p * (k + 1) // 2)
    eps = prec2err_estimate(guess, spec.digits)
    kmax = max(1, jint(6.6 * spec.digits / p))
    eps /= kmax

    total = ZERO
    c = 0
    while True:
        block = Fraction(0)
        for k in range(8):
            shift = p * (2 + 8 * c + k) // 2
            block += Fraction(a[k], (1 + 8 * c + k) ** n << shift)
        size = estimate(block)
        if abs(size) < eps:
            break
        total += to_decimal(block, 1 + err2prec(size, eps))
        c += 1
    return spec.context.plus(total)


def pi(spec, *, use_table: bool = True) -> Decimal:
    """pi to ``spec`` digits; the series is 8 times a Broadhurst ladder."""
    spec = as_spec(spec)
    hit = _from_table(PI, spec, use_table)
    if hit is not None:
        return hit
    return multiply_round(bbp_ladder(1, 1, _PI_LADDER, spec), 8)


def log2_const(spec, *, use_table: bool = True) -> Decimal:
    """ln 2; the series value of ``(ln 2)**2`` is 8/3 times a ladder sum."""
    from .elementary import sqrt

    spec = as_spec(spec)
    hit = _from_table(LOG2, spec, use_table)
    if hit is not None:
        return hit
    s = bbp_ladder(2, 1, _LOG2_LADDER, spec.digits + 1)
    s = multiply_round(s, 8)
    return spec.context.plus(sqrt(divide_round(s, 3)))


def e(spec, *, use_table: bool = True) -> Decimal:
    """Euler's number, as ``exp`` of a 1 padded to the requested digits."""
    from .elementary import exp

    spec = as_spec(spec)
    hit = _from_table(E, spec, use_table)
    if hit is not None:
        return hit
    return spec.context.plus(exp(scale_prec(ONE, spec.digits)))


@exact
def euler_gamma(spec, *, use_table: bool = True) -> Decimal:
    """Euler's constant from ``1 + ln 2 - ln 3 - sum (zeta(2n+1) - 1) / (4**n (2n+1))``."""
    from .elementary import log_int
    from .special import zeta

    spec = as_spec(spec)
    hit = _from_table(GAMMA, spec, use_table)
    if hit is not None:
        return hit

    eps = prec2err_estimate(0.577, spec.digits)
    inner = 2 + spec.digits
    result = ONE + log_int(2, inner) - log_int(3, inner)

    # The term-count estimate comes out negative; only its size matters.
    kmax = abs(jint((EST.ln(eps / 0.7) - 2) / 4)) or 1
    inner = 1 + err2prec(1.2, eps / kmax)
    n = 1
    while True:
        c = zeta(2 * n + 1, inner) - ONE
        c = divide_round(c, (2 * n + 1) << (2 * n))
        result -= c
        if estimate(c) < 0.1 * eps:
            break
        n += 1
    return spec.context.plus(result)
