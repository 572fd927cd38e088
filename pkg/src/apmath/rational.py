"""Exact fractions used to postpone rounding in series coefficients.

The rational type is :class:`fractions.Fraction`: it is already kept
coprime with a positive denominator, and its arithmetic and comparisons
are exact.  This module adds the handful of operations the series code
needs on top of it.
"""

from __future__ import annotations

import math
from decimal import ROUND_DOWN, Decimal
from fractions import Fraction

from .core import PrecisionSpec, as_spec, context, divide

__all__ = [
    "ONE",
    "ZERO",
    "Rational",
    "binomial",
    "floor",
    "parse_rational",
    "pochhammer",
    "rational_pow",
    "to_decimal",
    "to_float",
    "to_fstring",
    "trunc",
]

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_INT32 = (-(2**31), 2**31 - 1)


def parse_rational(text: str, radix: int = 10) -> Fraction:
    """Parse ``"p/q"`` or a bare integer ``"p"`` written in ``radix``."""
    num, slash, den = text.strip().partition("/")
    a = int(num, radix)
    if not slash:
        return Fraction(a)
    b = int(den, radix)
    if b == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(a, b)


def rational_pow(a: Fraction, exponent: int) -> Fraction:
    """``a**exponent`` exactly; the exponent must fit in 32 bits."""
    if not _INT32[0] <= exponent <= _INT32[1]:
        word = "large" if exponent > 0 else "small"
        raise ValueError(f"Exponent {exponent} too {word}.")
    if exponent == 0:
        return ONE
    if a == 0 and exponent < 0:
        raise ZeroDivisionError("zero raised to a negative power")
    return Fraction(a) ** exponent


def binomial(n, m: int) -> Fraction:
    """``n (n-1) ... (n-m+1) / m!`` for rational ``n``."""
    if m < 0:
        raise ValueError(f"binomial lower index must be non-negative, got {m}")
    n = Fraction(n)
    result = ONE
    for i in range(m):
        result *= n - i
    return result / math.factorial(m)


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+n-1)``; ``n == 0`` gives 1."""
    if n < 0:
        raise ValueError(f"Pochhammer index must be non-negative, got {n}")
    a = Fraction(a)
    result = ONE
    for i in range(n):
        result *= a + i
    return result


def floor(a: Fraction) -> int:
    return math.floor(a)


def trunc(a: Fraction) -> int:
    return math.trunc(a)


def to_decimal(a: Fraction, spec) -> Decimal:
    """Numerator divided by denominator under ``spec``."""
    spec = as_spec(spec)
    return divide(Decimal(a.numerator), Decimal(a.denominator), spec.digits, spec.rounding)


def to_float(a: Fraction) -> float:
    # Divide in decimal first so huge numerators and denominators do not
    # overflow individually.
    return float(context(34).divide(Decimal(a.numerator), Decimal(a.denominator)))


def to_fstring(a: Fraction, digits: int) -> str:
    """Fixed-point text with ``digits`` digits, truncated toward zero."""
    if a.denominator == 1:
        return str(a.numerator)
    return str(to_decimal(a, PrecisionSpec(digits, ROUND_DOWN)))
