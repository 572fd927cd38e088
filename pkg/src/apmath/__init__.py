"""Arbitrary-precision decimal mathematics where precision follows the arguments.

Values are :class:`decimal.Decimal`.  The number of digits of an argument is
its accuracy claim, and each function returns as many digits as that claim
supports after first-order error propagation::

    >>> from decimal import Decimal
    >>> from apmath import sin, scale_prec
    >>> sin(Decimal("0.5000"))
    Decimal('0.4794')
    >>> sin(scale_prec(Decimal("0.5"), 20))
    Decimal('0.479425538604203000273')

Constants and zeta take a digit count (or a :class:`PrecisionSpec`) instead.
"""

from .constants import E, GAMMA, LOG2, PI, bbp_ladder, e, euler_gamma, log2_const, pi
from .core import (
    PrecisionSpec,
    add_round,
    divide_round,
    err2prec,
    err2prec_abs,
    err2prec_rel,
    multiply_round,
    parse,
    pow_round,
    prec2err,
    precision,
    render,
    round_to,
    scale_prec,
    subtract_round,
    ulp,
)
from .elementary import cbrt, exp, hypot, log, log_int, log_rational, pow, root, sqrt
from .errors import ApMathError, DomainError, PoleError, PrecisionLossError, RangeError
from .hyperbolic import acosh, asinh, cosh, sinh, tanh
from .rational import Rational
from .sequences import bernoulli, factorial
from .special import gamma, pochhammer, zeta, zeta1
from .trig import asin, atan, cos, cot, mod2pi, modpi, sin, tan

__version__ = "0.1.0"

__all__ = [
    "E",
    "GAMMA",
    "LOG2",
    "PI",
    "ApMathError",
    "DomainError",
    "PoleError",
    "PrecisionLossError",
    "PrecisionSpec",
    "RangeError",
    "Rational",
    "acosh",
    "add_round",
    "asin",
    "asinh",
    "atan",
    "bbp_ladder",
    "bernoulli",
    "cbrt",
    "cos",
    "cosh",
    "cot",
    "divide_round",
    "e",
    "err2prec",
    "err2prec_abs",
    "err2prec_rel",
    "euler_gamma",
    "exp",
    "factorial",
    "gamma",
    "hypot",
    "log",
    "log2_const",
    "log_int",
    "log_rational",
    "mod2pi",
    "modpi",
    "multiply_round",
    "parse",
    "pi",
    "pochhammer",
    "pow",
    "pow_round",
    "prec2err",
    "precision",
    "render",
    "root",
    "round_to",
    "scale_prec",
    "sin",
    "sinh",
    "sqrt",
    "subtract_round",
    "tan",
    "tanh",
    "ulp",
    "zeta",
    "zeta1",
]
