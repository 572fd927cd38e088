"""Constants, zeta values and the Gamma function at chosen precisions.

Run with ``python demos/constants_and_special.py``.
"""

from decimal import Decimal

from apmath import bernoulli, e, euler_gamma, gamma, log2_const, pi, scale_prec, zeta

for name, fn in (("pi", pi), ("e", e), ("gamma", euler_gamma), ("log 2", log2_const)):
    print(f"{name:>6} = {fn(60)}")

print("\npi from the series instead of the table, 80 digits:")
print(f"  {pi(80, use_table=False)}")

print("\nzeta at integers, 40 digits (even: Bernoulli; 3, 5: ladders; 7 and up: rapidly converging sums):")
for n in (2, 3, 4, 5, 7, 9, 20):
    print(f"  zeta({n:>2}) = {zeta(n, 40)}")

print("\nExact Bernoulli numbers:", ", ".join(f"B{n} = {bernoulli(n)}" for n in (0, 1, 2, 4, 12, 20)))

print("\nGamma with 30-digit arguments:")
for text in ("0.5", "1.5", "3.25", "-2.5"):
    x = scale_prec(Decimal(text), 30 - len(Decimal(text).as_tuple().digits))
    print(f"  Gamma({text:>5}) = {gamma(x)}")
