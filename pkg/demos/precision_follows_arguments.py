"""How the digits of an argument decide the digits of a result.

Run with ``python demos/precision_follows_arguments.py``.
"""

from decimal import Decimal

from apmath import PrecisionLossError, exp, log, precision, scale_prec, sin, sqrt, subtract_round


def show(label, value):
    print(f"  {label:<34} {value}  [{precision(value)} digits]")


print("The same number, written with more trailing zeros, is a sharper claim:")
for text in ("2", "2.0", "2.000000", "2.00000000000000000000"):
    show(f"sqrt({text})", sqrt(Decimal(text)))

print("\nscale_prec appends zeros when you know the argument is exact:")
half = Decimal("0.5")
for pad in (0, 5, 30):
    show(f"sin(0.5 padded by {pad})", sin(scale_prec(half, pad)))

print("\nA function that amplifies errors returns fewer digits:")
show("exp(100.0)", exp(Decimal("100.0")))
show("exp(100.00000000000000)", exp(Decimal("100.00000000000000")))

print("\nOne that damps them returns more:")
show("log(1000000.0)", log(Decimal("1000000.0")))

print("\nCancellation leaves nothing to report:")
try:
    subtract_round(Decimal("1.00"), Decimal("1.00"))
except PrecisionLossError as exc:
    print(f"  subtract_round(1.00, 1.00) -> {type(exc).__name__}: {exc}")
