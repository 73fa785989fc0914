"""Command-line front end.

Every command is deterministic: identical invocations produce
byte-identical output.  Exit code 0 means all internal verifications
passed.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional

from . import explorer, words
from .exp_witness import construct_exp_witness
from .poly_witness import (
    IntPoly,
    construct_poly_witness,
    zero_block_witness,
)

__all__ = ["main"]


def _parse_value(text: str) -> int:
    """Parse a nonnegative integer, accepting the m^k power syntax."""
    if "^" in text:
        base, _, exp = text.partition("^")
        return int(base) ** int(exp)
    return int(text)


def _write_out(payload: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(payload)
    else:
        with open(out, "w") as fh:
            fh.write(payload)


def _cmd_gamma(args) -> int:
    w = words.parse_word(args.word, args.base)
    gp = words.gamma_prime(w)
    gam = gp - 1
    target = gam / (w.length * math.log(args.base))
    sys.stdout.write(
        f"word: {w.text()}\n"
        f"length: {w.length}\n"
        f"gamma_prime: {gp}\n"
        f"gamma: {gam}\n"
        f"target: {target!r}\n"
    )
    return 0


def _cmd_count(args) -> int:
    w = words.parse_word(args.word, args.base)
    n = _parse_value(args.value)
    exp_text = (
        "0" if n == 0 else
        words.format_digits(words.expansion(n, args.base).digits, args.base)
    )
    count = words.count_in_integer(w, n, args.base)
    sys.stdout.write(f"expansion: {exp_text}\ncount: {count}\n")
    return 0


def _cmd_witness_poly(args) -> int:
    f = IntPoly.parse(args.poly)
    w = words.parse_word(args.word, args.base)
    if w.is_all_zeros:
        report = zero_block_witness(f, args.base, w.length, args.scale)
    else:
        report = construct_poly_witness(f, args.base, w, args.scale)
    _write_out(report.to_json(), args.out)
    if not report.verified_congruence:
        sys.stderr.write("internal verification failed\n")
        return 1
    return 0


def _cmd_witness_exp(args) -> int:
    w = words.parse_word(args.word, args.prime)
    report = construct_exp_witness(
        args.m, args.prime, w, args.scale, digit_budget=args.digit_budget
    )
    _write_out(report.to_json(), args.out)
    if not (report.verified_congruence and report.size_bound_ok):
        sys.stderr.write("internal verification failed\n")
        return 1
    return 0


def _cmd_explore(args) -> int:
    spec = explorer.FunctionSpec.parse(args.spec)
    w = words.parse_word(args.word, args.base)
    start_text, _, stop_text = args.range.partition("..")
    series, meta = explorer.scan(
        spec, args.base, w, int(start_text), int(stop_text),
        stride=args.stride, digit_budget=args.digit_budget,
    )
    _write_out(explorer.emit(series, args.format, meta), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digit-witness",
        description=(
            "Construct and verify integers whose base-q expansions "
            "contain many prescribed subword occurrences."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="self-overlap constant of a word")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("count", help="e_q(w; n)")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--value", required=True,
                   help="nonnegative integer; m^k syntax accepted")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("witness-poly", help="polynomial witness report")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--poly", required=True, help="coefficients c0,c1,...,cd")
    p.add_argument("--scale", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_witness_poly)

    p = sub.add_parser("witness-exp", help="exponential witness report")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--scale", type=int, required=True)
    p.add_argument("--digit-budget", type=int, default=10 ** 7)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_witness_exp)

    p = sub.add_parser("explore", help="scan e_q(w; h(n))/ln n over a range")
    p.add_argument("--spec", required=True,
                   help='"poly:c0,c1,...,cd" or "exp:m"')
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--range", required=True, help="a..b inclusive")
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--digit-budget", type=int, default=10 ** 7)
    p.add_argument("--format", choices=["csv", "structured"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_explore)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
