"""Exception types raised by the library.

All of them derive from :class:`ArithmeticError` so callers that only care
about "the math went wrong" can catch that.
"""


class ApMathError(ArithmeticError):
    """Base class for library errors."""


class DomainError(ApMathError, ValueError):
    """Argument outside the domain of the function (log of a negative, ...)."""


class PoleError(DomainError):
    """Argument sits on a pole: zeta(1), Gamma at non-positive integers, cot(0)."""


class PrecisionLossError(ApMathError):
    """Cancellation left no valid digits in the result."""


class RangeError(ApMathError, OverflowError):
    """Argument too large (or too small) for the magnitude estimates."""
