"""Invariant checks run by ``apmath selftest``.

Each group evaluates identities at 25 digits and compares both sides in
ulps of whichever side has the coarser last place.  ``inject_ulps`` shifts
every left-hand side by that many ulps before comparing; it exists so that
a harness can prove the checks are able to fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from typing import Callable, Iterator

from . import constants, elementary, hyperbolic, special, trig
from .core import (
    EXACT,
    add_round,
    divide_round,
    exponent,
    multiply_round,
    pow_round,
    scale_prec,
    subtract_round,
)
from .sequences import factorial

DIGITS = 25
TOLERANCE = 4


@dataclass(frozen=True)
class Check:
    name: str
    lhs: Decimal
    rhs: Decimal | int


def _arg(text: str) -> Decimal:
    """A decimal argument padded out to :data:`DIGITS` digits."""
    x = Decimal(text)
    return scale_prec(x, max(0, DIGITS - len(x.as_tuple().digits)))


def _square(x: Decimal) -> Decimal:
    return multiply_round(x, x)


def _constants() -> Iterator[Check]:
    for name, fn in (("pi", constants.pi), ("log2", constants.log2_const)):
        yield Check(f"{name} series == table", fn(DIGITS, use_table=False), fn(DIGITS))
    yield Check("e == exp(1)", constants.e(DIGITS), elementary.exp(_arg("1")))
    yield Check("zeta(2) == pi**2 / 6", special.zeta(2, DIGITS),
                divide_round(_square(constants.pi(DIGITS + 2)), 6))


def _elementary() -> Iterator[Check]:
    for t in ("0.3", "1.7", "12.5"):
        x = _arg(t)
        yield Check(f"exp(log({t}))", elementary.exp(elementary.log(x)), x)
        yield Check(f"log(exp({t}))", elementary.log(elementary.exp(x)), x)
    for n, t in ((2, "2"), (3, "10"), (5, "0.7")):
        x = _arg(t)
        yield Check(f"root({n}, {t})**{n}", pow_round(elementary.root(n, x), n), x)
    yield Check("hypot(3, 4)", elementary.hypot(_arg("3"), _arg("4")), 5)


def _trig() -> Iterator[Check]:
    for t in ("0.1", "0.5", "1", "2", "3", "5", "7"):
        x = _arg(t)
        yield Check(f"sin**2 + cos**2 at {t}",
                    add_round(_square(trig.sin(x)), _square(trig.cos(x))), 1)
    for t in ("0.3", "0.7", "1.0", "1.4"):
        x = _arg(t)
        yield Check(f"tan * cot at {t}", multiply_round(trig.tan(x), trig.cot(x)), 1)
    for t in ("0.2", "1.1"):
        x = _arg(t)
        yield Check(f"asin(sin({t}))", trig.asin(trig.sin(x)), x)
        yield Check(f"atan(tan({t}))", trig.atan(trig.tan(x)), x)


def _hyperbolic() -> Iterator[Check]:
    for t in ("0.1", "1", "2", "3"):
        x = _arg(t)
        yield Check(f"cosh**2 - sinh**2 at {t}",
                    subtract_round(_square(hyperbolic.cosh(x)), _square(hyperbolic.sinh(x))), 1)
    for t in ("0.5", "1", "2"):
        x = _arg(t)
        yield Check(f"asinh(sinh({t}))", hyperbolic.asinh(hyperbolic.sinh(x)), x)
        yield Check(f"acosh(cosh({t}))", hyperbolic.acosh(hyperbolic.cosh(x)), x)


def _special() -> Iterator[Check]:
    for t in ("0.3", "0.8", "1.2"):
        x = _arg(t)
        yield Check(f"Gamma({t} + 1) == {t} Gamma({t})",
                    special.gamma(EXACT.add(x, 1)), multiply_round(x, special.gamma(x)))
    for n in range(2, 9):
        yield Check(f"Gamma({n}) == {n - 1}!", special.gamma(_arg(str(n))), factorial(n - 1))


GROUPS: dict[str, Callable[[], Iterator[Check]]] = {
    "constants": _constants,
    "elementary": _elementary,
    "trig": _trig,
    "hyperbolic": _hyperbolic,
    "special": _special,
}


@dataclass(frozen=True)
class Outcome:
    check: Check
    ulps: Decimal

    @property
    def passed(self) -> bool:
        return self.ulps <= TOLERANCE


def run_group(name: str, inject_ulps: int = 0) -> list[Outcome]:
    outcomes = []
    for check in GROUPS[name]():
        lhs = check.lhs
        scale = exponent(lhs)
        if isinstance(check.rhs, Decimal):
            scale = max(scale, exponent(check.rhs))
        if inject_ulps:
            lhs = EXACT.add(lhs, Decimal(inject_ulps).scaleb(scale))
        diff = EXACT.subtract(lhs, Decimal(check.rhs)).copy_abs()
        outcomes.append(Outcome(check, diff.scaleb(-scale, context=EXACT)))
    return outcomes


def run(groups=None, inject_ulps: int = 0, out=print) -> bool:
    """Run the named groups (all by default); report and return overall success."""
    ok = True
    for name in groups or GROUPS:
        outcomes = run_group(name, inject_ulps)
        failed = [o for o in outcomes if not o.passed]
        status = "PASS" if not failed else "FAIL"
        out(f"{status} {name}: {len(outcomes) - len(failed)}/{len(outcomes)} invariants")
        for o in failed:
            out(f"  {o.check.name}: off by {o.ulps:.3g} ulp")
        ok = ok and not failed
    return ok
