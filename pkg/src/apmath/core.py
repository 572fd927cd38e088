"""Decimal values whose digit count is their accuracy claim.

A value ``x`` is a :class:`decimal.Decimal`; its coefficient digits are its
precision and ``10**exponent`` is its ulp.  Every input is assumed to carry
an error of half an ulp, and the ``*_round`` helpers below propagate that
error to first order and round their results accordingly.

Arithmetic inside the library runs under :data:`EXACT`, a context whose
precision is effectively unbounded, so ``+``, ``-`` and ``*`` never round.
Division and any other rounding step always names its context explicitly.

Error budgets, loop bounds and branch tests use :func:`estimate`, a
53-bit binary float with an unbounded exponent.  It plays the role of a
hardware double without underflowing when thousands of digits are requested.
"""

from __future__ import annotations

import decimal
import functools
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction

import mpmath

from .errors import DomainError, PrecisionLossError, RangeError

__all__ = [
    "EXACT",
    "PrecisionSpec",
    "add_round",
    "as_decimal",
    "as_spec",
    "divide_round",
    "err2prec",
    "err2prec_abs",
    "err2prec_rel",
    "estimate",
    "guarded",
    "multiply_round",
    "parse",
    "pow_round",
    "prec2err",
    "precision",
    "render",
    "round_to",
    "scale_prec",
    "subtract_round",
    "ulp",
    "ulp_distance",
]

_TRAPS = [decimal.InvalidOperation, decimal.DivisionByZero, decimal.Overflow]

EXACT = decimal.Context(
    prec=decimal.MAX_PREC,
    rounding=ROUND_HALF_EVEN,
    Emax=decimal.MAX_EMAX,
    Emin=decimal.MIN_EMIN,
    traps=_TRAPS,
)

ZERO = Decimal(0)
ONE = Decimal(1)
TWO = Decimal(2)

# Binary estimates: double precision, unbounded exponent.
EST = mpmath.MPContext()
EST.prec = 53

_INT_MAX = 2**31 - 1
_INT_MIN = -(2**31)

# Keeps err2prec(x, prec2err(x, p)) == p despite binary rounding at exact
# powers of ten.
_LOG10_SLACK = 1e-9


@dataclass(frozen=True)
class PrecisionSpec:
    """Requested result precision: number of digits and rounding mode."""

    digits: int
    rounding: str = ROUND_HALF_EVEN

    def __post_init__(self):
        if int(self.digits) != self.digits or self.digits < 1:
            raise ValueError(f"precision must be a positive integer, got {self.digits!r}")

    @property
    def context(self) -> decimal.Context:
        return context(self.digits, self.rounding)


def as_spec(spec) -> PrecisionSpec:
    if isinstance(spec, PrecisionSpec):
        return spec
    if isinstance(spec, int) and not isinstance(spec, bool):
        return PrecisionSpec(spec)
    raise TypeError(f"expected PrecisionSpec or int, got {type(spec).__name__}")


@functools.lru_cache(maxsize=8192)
def context(digits: int, rounding: str = ROUND_HALF_EVEN) -> decimal.Context:
    """Context rounding to ``digits`` significant digits."""
    return decimal.Context(
        prec=digits,
        rounding=rounding,
        Emax=decimal.MAX_EMAX,
        Emin=decimal.MIN_EMIN,
        traps=_TRAPS,
    )


def exact(func):
    """Run ``func`` with :data:`EXACT` as the current decimal context."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        with decimal.localcontext(EXACT):
            return func(*args, **kwargs)

    return wrapper


# ---------------------------------------------------------------------------
# Conversions and inspection
# ---------------------------------------------------------------------------


def parse(text: str) -> Decimal:
    """Parse decimal text; trailing zeros are kept because they carry precision."""
    try:
        value = Decimal(text.strip())
    except decimal.InvalidOperation:
        raise ValueError(f"not a decimal number: {text!r}") from None
    if not value.is_finite():
        raise ValueError(f"not a finite decimal number: {text!r}")
    return value


def render(x: Decimal, fmt: str = "plain") -> str:
    """Render ``x`` so that :func:`parse` recovers coefficient and exponent.

    ``plain`` uses positional notation unless the exponent is positive or
    the magnitude is beyond 1e+-20, where positional text would change the
    digit count.
    """
    if fmt == "sci":
        return str(x)
    if fmt != "plain":
        raise ValueError(f"unknown format {fmt!r}")
    exponent = x.as_tuple().exponent
    if exponent > 0 or abs(x.adjusted()) > 20:
        return str(x)
    return format(x, "f")


def as_decimal(x) -> Decimal:
    if isinstance(x, Decimal):
        if not x.is_finite():
            raise ValueError(f"non-finite argument {x}")
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Decimal(x)
    if isinstance(x, str):
        return parse(x)
    raise TypeError(
        f"expected Decimal, int or str, got {type(x).__name__}; "
        "binary floats carry no decimal precision"
    )


def precision(x: Decimal) -> int:
    """Number of digits of the coefficient; zero has precision 1."""
    return len(x.as_tuple().digits)


def exponent(x: Decimal) -> int:
    return x.as_tuple().exponent


def ulp(x: Decimal) -> Decimal:
    """Unit in the last place, ``10**exponent``."""
    return Decimal((0, (1,), exponent(x)))


def round_to(x: Decimal, digits: int, rounding: str = ROUND_HALF_EVEN) -> Decimal:
    """Round to ``digits`` significant digits; shorter values are returned as is."""
    if digits < 1:
        raise PrecisionLossError(f"no valid digits left in {x} (precision {digits})")
    return context(digits, rounding).plus(x)


def divide(x, y, digits: int, rounding: str = ROUND_HALF_EVEN) -> Decimal:
    """``x / y`` with ``digits`` digits.

    Exact quotients are padded with zeros rather than returned in their
    shortest form, so the digit count always states the accuracy.
    """
    if digits < 1:
        raise PrecisionLossError(f"no valid digits left in {x}/{y} (precision {digits})")
    if y == 0:
        raise ZeroDivisionError(f"division of {x} by zero")
    return _pad(context(digits, rounding).divide(Decimal(x), Decimal(y)), digits)


def _pad(x: Decimal, digits: int) -> Decimal:
    """Append zeros so that a nonzero ``x`` shows ``digits`` digits."""
    missing = digits - precision(x)
    if missing > 0 and x != 0:
        return scale_prec(x, missing)
    return x


# ---------------------------------------------------------------------------
# Estimates
# ---------------------------------------------------------------------------


def estimate(x):
    """Double-precision estimate of a Decimal, Fraction, int or float."""
    if isinstance(x, Decimal):
        sign, digits, exp = x.as_tuple()
        if not any(digits):
            return EST.zero
        lead = digits[:20]
        text = "".join(map(str, lead))
        exp += len(digits) - len(lead)
        return EST.mpf(f"{'-' if sign else ''}{text}e{exp}")
    if isinstance(x, Fraction):
        return EST.mpf(x.numerator) / x.denominator
    return EST.mpf(x)


def ulp_estimate(x: Decimal):
    return EST.mpf(f"1e{exponent(x)}")


def to_float(x) -> float:
    """Narrow to a hardware double; out-of-range magnitudes raise RangeError."""
    value = float(x)
    if value in (float("inf"), float("-inf")) or (value == 0 and x != 0):
        raise RangeError(f"{x} is outside the range of double precision")
    return value


def jint(v) -> int:
    """Truncating, saturating conversion to a 32-bit int (the classic cast)."""
    v = EST.mpf(v)
    if EST.isnan(v):
        return 0
    if EST.isinf(v):
        return _INT_MAX if v > 0 else _INT_MIN
    return max(_INT_MIN, min(_INT_MAX, int(v)))


def _log10_digits(ratio) -> int:
    ratio = abs(EST.mpf(ratio))
    if ratio == 0:
        return _INT_MIN
    return jint(EST.log10(ratio) + _LOG10_SLACK)


def err2prec_abs(x, xerr) -> int:
    """Digits of ``x`` that are valid given an absolute error ``xerr``.

    ``1 + floor(log10(|0.5 x / xerr|))``; 100 +- 0.5 has 3 digits.
    """
    xerr = estimate(xerr) if isinstance(xerr, (Decimal, Fraction)) else EST.mpf(xerr)
    if xerr == 0:
        raise DomainError("absolute error must be nonzero")
    x = estimate(x) if isinstance(x, (Decimal, Fraction)) else EST.mpf(x)
    return 1 + _log10_digits(0.5 * x / xerr)


def err2prec_rel(xerr) -> int:
    """Digits valid given a relative error; +-0.5 gives 1, +-0.05 gives 2."""
    xerr = estimate(xerr) if isinstance(xerr, (Decimal, Fraction)) else EST.mpf(xerr)
    if xerr == 0:
        raise DomainError("relative error must be nonzero")
    return 1 + _log10_digits(0.5 / xerr)


def err2prec(*args) -> int:
    """``err2prec(x, xerr)`` for absolute, ``err2prec(xerr)`` for relative errors."""
    if len(args) == 1:
        return err2prec_rel(args[0])
    if len(args) == 2:
        return err2prec_abs(*args)
    raise TypeError("err2prec takes one or two arguments")


def prec2err_estimate(x, prec: int):
    x = estimate(x) if isinstance(x, (Decimal, Fraction)) else EST.mpf(x)
    return 5 * abs(x) * EST.mpf(f"1e{-prec}")


def prec2err(x, prec: int) -> float:
    """Absolute error of ``x`` known to ``prec`` digits: ``5 |x| 10**-prec``."""
    return float(prec2err_estimate(x, prec))


# ---------------------------------------------------------------------------
# Rounded arithmetic
# ---------------------------------------------------------------------------


def scale_prec(x: Decimal, d) -> Decimal:
    """Append decimal zeros: same value, higher (pseudo) precision.

    ``d`` is a digit count, or a :class:`PrecisionSpec` whose digits are
    the minimum precision wanted.
    """
    if isinstance(d, PrecisionSpec):
        missing = d.digits - precision(x)
        return scale_prec(x, missing) if missing > 0 else x
    if d < 0:
        raise ValueError(f"cannot remove digits with scale_prec ({d})")
    if d == 0:
        return x
    return x.quantize(Decimal((0, (1,), exponent(x) - d)), context=EXACT)


def _half_ulp_sum(x: Decimal, y: Decimal):
    return (ulp_estimate(x) + ulp_estimate(y)) / 2


def _round_sum(result: Decimal, x: Decimal, y: Decimal, op: str) -> Decimal:
    if result == 0:
        raise PrecisionLossError(f"{x} {op} {y} cancels to zero; no valid digits left")
    return round_to(result, err2prec_abs(result, _half_ulp_sum(x, y)))


def add_round(x: Decimal, y: Decimal) -> Decimal:
    """``x + y`` rounded to the digits allowed by the sum of half-ulp errors."""
    return _round_sum(EXACT.add(x, y), x, y, "+")


def subtract_round(x: Decimal, y: Decimal) -> Decimal:
    """``x - y`` rounded like :func:`add_round`; full cancellation raises."""
    return _round_sum(EXACT.subtract(x, y), x, y, "-")


def multiply_round(x: Decimal, y) -> Decimal:
    """Product rounded to the precision of the less precise factor.

    Integer factors are exact and keep the precision of ``x``.  A Fraction
    is converted with two guard digits first.  Multiplying by exact zero
    gives zero.
    """
    if isinstance(y, Decimal):
        return round_to(EXACT.multiply(x, y), min(precision(x), precision(y)))
    if isinstance(y, Fraction):
        if y == 0:
            return ZERO
        digits = 2 + precision(x)
        fy = divide(Decimal(y.numerator), Decimal(y.denominator), digits)
        return multiply_round(x, fy)
    if isinstance(y, int):
        product = EXACT.multiply(x, Decimal(y))
        if y == 0:
            return product
        return round_to(product, precision(x))
    raise TypeError(f"cannot multiply by {type(y).__name__}")


def divide_round(x, y) -> Decimal:
    """Quotient at the precision of the less precise decimal operand.

    Integers are exact and do not limit the precision.  Exact quotients
    are padded with zeros up to that precision.
    """
    if isinstance(x, Decimal) and isinstance(y, Decimal):
        digits = min(precision(x), precision(y))
    elif isinstance(x, Decimal):
        digits = precision(x)
    elif isinstance(y, Decimal):
        digits = precision(y)
    else:
        raise TypeError("divide_round needs at least one Decimal operand")
    return divide(x, y, digits)


def pow_round(x: Decimal, n: int) -> Decimal:
    """``x**n``, shedding ``floor(log10|n|)`` digits (relative error times n)."""
    if n == 0:
        return ONE
    if x == 0 and n < 0:
        raise ZeroDivisionError(f"zero raised to negative power {n}")
    digits = precision(x) - jint(EST.log10(abs(n)))
    if digits < 1:
        raise PrecisionLossError(f"no valid digits left in {x}**{n}")
    return context(digits).power(x, n)


def guarded(func, x: Decimal, digits: int = 2) -> Decimal:
    """``func(x)`` evaluated on ``x`` padded with ``digits`` zeros.

    Every precision formula is driven by the ulp of the argument, so the
    padded evaluation returns ``digits`` extra digits; they are dropped
    again, which leaves the returned precision unchanged while the
    intermediate rounding errors shrink a hundredfold.
    """
    result = func(scale_prec(x, digits))
    if result == 0:
        return result
    target = precision(result) - digits
    if target == 0:
        # err2prec truncates toward zero, so one digit survives unguarded.
        target = 1
    if target < 0:
        # Nothing is left at the caller's precision; let the unguarded
        # evaluation decide between a digit and an error.
        return func(x)
    return round_to(result, target)


def ulp_distance(value: Decimal, reference) -> Decimal:
    """``|value - reference|`` in units of the last place of ``value``."""
    diff = EXACT.subtract(value, Decimal(reference)).copy_abs()
    return diff.scaleb(-exponent(value), context=EXACT)
