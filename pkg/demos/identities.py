"""Classic identities checked at 25 digits, the way ``apmath selftest`` does.

Run with ``python demos/identities.py``.
"""

from apmath import selftest

for name in selftest.GROUPS:
    for outcome in selftest.run_group(name):
        mark = "ok " if outcome.passed else "BAD"
        print(f"{mark} {name:<11} {outcome.check.name:<32} {outcome.ulps:.2g} ulp")
