"""Command line surface: conversions, ranking, statistics, tables, sweeps.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 range
error, 4 budget exceeded.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    BudgetExceeded,
    DigitBoundError,
    RankOutOfRange,
    WindowParseError,
)
from .group_core import DEFAULT_BUDGET, canonical_length, group_order, parse_window
from .mixed_radix import MixedRadixNumber, decode, encode
from .statistics import (
    fmaj,
    fmaj_exponents,
    inversion_table,
    length_L,
    poincare,
    rank,
    unrank,
)
from .subexceedant import digits_of_element, element_of_integer, integer_of_element
from .verify import run_property_checks

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_RANGE = 3
EXIT_BUDGET = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsg",
        description="Integer representations and statistics of m-colored permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="integer <-> mixed-radix digit string")
    p.add_argument("--m", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--to-digits", type=int, metavar="X")
    group.add_argument("--to-int", metavar="DIGITS")

    p = sub.add_parser("element", help="integer <-> group element window")
    esub = p.add_subparsers(dest="action", required=True)
    enc = esub.add_parser("encode", help="integer to window")
    enc.add_argument("--m", type=int, required=True)
    enc.add_argument("--n", type=int, required=True)
    enc.add_argument("x", type=int)
    dec = esub.add_parser("decode", help="window to integer")
    dec.add_argument("--m", type=int, required=True)
    dec.add_argument("window")

    p = sub.add_parser("rank", help="1-based rank of a window")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("window")

    p = sub.add_parser("unrank", help="window at a 1-based rank")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("rank", type=int)

    p = sub.add_parser("stats", help="all statistics of a window, as JSON")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--bfs", action="store_true", help="also compute word length")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("window")

    p = sub.add_parser("table", help="the whole group in rank order")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("poincare", help="coefficients of the length generating function")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", help="run the whole-group invariant sweep")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("text-encode", help="text to integer to digit string")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("text")

    return parser


def _cmd_convert(args) -> int:
    if args.to_digits is not None:
        if args.to_digits < 0:
            raise DigitBoundError(f"{args.to_digits} is negative")
        print(encode(args.to_digits, args.m))
    else:
        print(decode(MixedRadixNumber.from_text(args.to_int, args.m)))
    return EXIT_OK


def _cmd_element(args) -> int:
    if args.action == "encode":
        if args.x < 0:
            raise DigitBoundError(f"{args.x} is negative")
        print(element_of_integer(args.x, args.m, args.n).window())
    else:
        print(integer_of_element(parse_window(args.window, args.m)))
    return EXIT_OK


def _cmd_rank(args) -> int:
    print(rank(parse_window(args.window, args.m)))
    return EXIT_OK


def _cmd_unrank(args) -> int:
    print(unrank(args.rank, args.m, args.n).window())
    return EXIT_OK


def _cmd_stats(args) -> int:
    w = parse_window(args.window, args.m)
    table = inversion_table(w)
    out = {
        "inv_table": str(table),
        # for m = 1 the root system is unavailable; length additivity
        # makes the entry sum the same number
        "L": length_L(w) if w.m >= 2 else sum(table.entries),
        "fmaj": fmaj(w),
        "fmaj_exponents": fmaj_exponents(w),
        "rank": rank(w),
        "subexceedant_digits": str(digits_of_element(w)),
        "integer_rep": integer_of_element(w),
    }
    if args.bfs:
        out["canonical_length"] = canonical_length(w, args.budget)
    print(json.dumps(out))
    return EXIT_OK


def _cmd_table(args) -> int:
    order = group_order(args.m, args.n)
    if order > args.budget:
        raise BudgetExceeded(f"group order {order} exceeds budget {args.budget}")
    rows = []
    for r in range(1, order + 1):
        w = unrank(r, args.m, args.n)
        rows.append((r, w.window(), str(inversion_table(w))))
    if args.format == "csv":
        for r, window, inv in rows:
            print(f"{r},{window},{inv}")
    else:
        print(json.dumps(
            [{"rank": r, "window": window, "inv_table": inv} for r, window, inv in rows]
        ))
    return EXIT_OK


def _cmd_poincare(args) -> int:
    print(poincare(args.m, args.n))
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = run_property_checks(args.m, args.n, args.budget)
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_VERIFY_FAILED


def _cmd_text_encode(args) -> int:
    if not args.text:
        raise WindowParseError("empty input")
    for ch in args.text:
        if not 32 <= ord(ch) <= 126:
            raise WindowParseError(f"character {ch!r} is not printable ASCII")
    x = int("".join(str(ord(ch)) for ch in args.text))
    digits = encode(x, args.m)
    print(x)
    print(digits)
    print(digits.n)
    return EXIT_OK


_DISPATCH = {
    "convert": _cmd_convert,
    "element": _cmd_element,
    "rank": _cmd_rank,
    "unrank": _cmd_unrank,
    "stats": _cmd_stats,
    "table": _cmd_table,
    "poincare": _cmd_poincare,
    "verify": _cmd_verify,
    "text-encode": _cmd_text_encode,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    for field, minimum in (("m", 1), ("n", 1), ("budget", 1)):
        value = getattr(args, field, None)
        if value is not None and value < minimum:
            print(f"error: --{field} must be >= {minimum}, got {value}", file=sys.stderr)
            return EXIT_PARSE
    try:
        return _DISPATCH[args.command](args)
    except (WindowParseError, DigitBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OverflowError, RankOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
