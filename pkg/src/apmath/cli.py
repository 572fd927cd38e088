"""Command-line front end: ``apmath eval``, ``apmath const`` and ``apmath selftest``.

Exit status is 0 on success, 1 on usage or parse errors, 2 when the
library rejects the arguments (domain, pole, range or precision loss) and
3 when a self-test invariant fails.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from decimal import Decimal
from typing import Callable, Sequence

from . import constants, elementary, hyperbolic, selftest, sequences, special, trig
from .core import PrecisionSpec, parse, render, scale_prec
from .rational import Rational

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_SELFTEST = 0, 1, 2, 3

_EVAL_EPILOG = """\
Arguments are decimal strings and their digits are their precision:
'2.0000' asks for about five significant digits, '2' for one.  Trailing
zeros matter.  Use --pad N to append N zeros to every decimal argument.
Functions marked [digits] take their precision from --digits instead.
"""


@dataclass(frozen=True)
class Entry:
    fn: Callable
    args: str  # one letter per positional: d = decimal, i = integer
    needs_digits: bool = False
    summary: str = ""


REGISTRY: dict[str, Entry] = {
    "sqrt": Entry(elementary.sqrt, "d", summary="square root"),
    "cbrt": Entry(elementary.cbrt, "d", summary="cube root, sign of x"),
    "root": Entry(elementary.root, "id", summary="root N X: X**(1/N)"),
    "hypot": Entry(elementary.hypot, "dd", summary="sqrt(x**2 + y**2)"),
    "exp": Entry(elementary.exp, "d"),
    "log": Entry(elementary.log, "d", summary="natural logarithm"),
    "log_int": Entry(elementary.log_int, "i", True, "ln N"),
    "pow": Entry(elementary.pow, "dd", summary="x**y for x >= 0"),
    "sin": Entry(trig.sin, "d"),
    "cos": Entry(trig.cos, "d"),
    "tan": Entry(trig.tan, "d"),
    "cot": Entry(trig.cot, "d"),
    "asin": Entry(trig.asin, "d"),
    "atan": Entry(trig.atan, "d"),
    "mod2pi": Entry(trig.mod2pi, "d", summary="x reduced into [0, 2 pi)"),
    "modpi": Entry(trig.modpi, "d", summary="x reduced into [-pi/2, pi/2]"),
    "sinh": Entry(hyperbolic.sinh, "d"),
    "cosh": Entry(hyperbolic.cosh, "d"),
    "tanh": Entry(hyperbolic.tanh, "d"),
    "asinh": Entry(hyperbolic.asinh, "d"),
    "acosh": Entry(hyperbolic.acosh, "d"),
    "gamma": Entry(special.gamma, "d", summary="Euler's Gamma function"),
    "pochhammer": Entry(special.pochhammer, "di", summary="pochhammer X N: rising factorial"),
    "zeta": Entry(special.zeta, "i", True, "Riemann zeta at an integer N >= 2"),
    "zeta1": Entry(special.zeta1, "i", summary="zeta(N) - 1 in double precision"),
    "bernoulli": Entry(sequences.bernoulli, "i", summary="exact Bernoulli number B_N"),
    "factorial": Entry(sequences.factorial, "i", summary="exact N!"),
}

CONSTANTS: dict[str, Callable] = {
    "pi": constants.pi,
    "e": constants.e,
    "gamma": constants.euler_gamma,
    "log2": constants.log2_const,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {value}")
    return value


def _non_negative(text: str) -> int:
    value = int(text) if text.lstrip("-").isdigit() else None
    if value is None or value < 0:
        raise argparse.ArgumentTypeError(f"not a non-negative integer: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="apmath",
        description="Arbitrary-precision decimal functions whose precision follows the arguments.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    listing = "\n".join(
        f"  {name:<11}{' [digits]' if e.needs_digits else '':<10}{e.summary}"
        for name, e in REGISTRY.items()
    )
    ev = sub.add_parser(
        "eval",
        help="evaluate one function",
        description="Evaluate one library function.",
        epilog=_EVAL_EPILOG + "\nfunctions:\n" + listing,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    ev.add_argument("function", help="function name, see the list below")
    ev.add_argument("args", nargs="*", help="decimal or integer arguments")
    ev.add_argument("--digits", type=_positive, help="result digits for [digits] functions")
    ev.add_argument("--pad", type=_non_negative, default=0, help="append N zeros to decimal arguments")
    ev.add_argument("--format", choices=("plain", "sci"), default="plain")

    co = sub.add_parser("const", help="print a constant", description="Print a constant.")
    co.add_argument("name", choices=sorted(CONSTANTS))
    co.add_argument("--digits", type=_positive, required=True)
    co.add_argument("--format", choices=("plain", "sci"), default="plain")

    st = sub.add_parser("selftest", help="run invariant checks at 25 digits",
                        description="Run the invariant checks at 25 digits.")
    st.add_argument("--group", choices=sorted(selftest.GROUPS), action="append",
                    help="run only this group (repeatable)")
    st.add_argument("--inject-ulps", type=int, default=0, help=argparse.SUPPRESS)
    return parser


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"expected an integer, got {text!r}") from None


def _parse_decimal(text: str, pad: int) -> Decimal:
    try:
        x = parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return scale_prec(x, pad) if pad else x


def _format(value, fmt: str) -> str:
    if isinstance(value, Decimal):
        return render(value, fmt)
    if isinstance(value, Rational):
        return str(value)
    return repr(value) if isinstance(value, float) else str(value)


def cmd_eval(ns) -> str:
    entry = REGISTRY.get(ns.function)
    if entry is None:
        raise UsageError(f"unknown function {ns.function!r}; see 'apmath eval --help'")
    if len(ns.args) != len(entry.args):
        raise UsageError(f"{ns.function} takes {len(entry.args)} argument(s), got {len(ns.args)}")
    values = [
        _parse_int(text) if kind == "i" else _parse_decimal(text, ns.pad)
        for kind, text in zip(entry.args, ns.args)
    ]
    if entry.needs_digits:
        if ns.digits is None:
            raise UsageError(f"{ns.function} needs --digits")
        values.append(PrecisionSpec(ns.digits))
    elif ns.digits is not None:
        raise UsageError(f"{ns.function} takes its precision from its arguments; use --pad")
    return _format(entry.fn(*values), ns.format)


def cmd_const(ns) -> str:
    return _format(CONSTANTS[ns.name](ns.digits), ns.format)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "selftest":
            ok = selftest.run(ns.group, inject_ulps=ns.inject_ulps)
            return EXIT_OK if ok else EXIT_SELFTEST
        text = cmd_eval(ns) if ns.command == "eval" else cmd_const(ns)
    except UsageError as exc:
        print(f"apmath: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"apmath: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, TypeError) as exc:
        print(f"apmath: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
