"""Command-line interface: ``madhava compute | table | verify``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 undefined
transform.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import accel, remainder
from .numkernel import Rounding
from .report import DEFAULT_ROWS, TABLE_COLUMNS, ConvergenceReport, build_table, make_row, sci_upper
from .series import MADHAVA_LEIBNIZ, partial_sum

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_UNDEFINED = 0, 1, 2, 3

METHODS = ("raw", "corrected", "series-a", "series-b", "series-c", "aitken", "aitken-iter",
           "brouncker", "averaged")


class UsageError(Exception):
    pass


def _ml(n: int) -> Fraction:
    return partial_sum(MADHAVA_LEIBNIZ, n)


def _raw(n: int) -> Fraction:
    return 4 * _ml(n)


def method_value(method: str, n: int, cf_order: int | None = None, rounds: int | None = None,
                 of: str | None = None) -> Fraction:
    """Approximation of pi by ``method`` at index ``n``; raises UsageError on bad combinations."""
    if method not in METHODS:
        raise UsageError(f"unknown method {method!r}")
    if n < 1:
        raise UsageError("--n must be >= 1")
    if cf_order is not None and method != "corrected":
        raise UsageError("--cf-order only applies to --method corrected")
    if rounds is not None and method != "aitken-iter":
        raise UsageError("--rounds only applies to --method aitken-iter")
    if of is not None and method != "averaged":
        raise UsageError("--of only applies to --method averaged")

    if method == "raw":
        return _raw(n)
    if method == "corrected":
        order = 3 if cf_order is None else cf_order
        if order < 1:
            raise UsageError("--cf-order must be >= 1")
        return remainder.corrected_pi(n, order)
    if method in accel.SERIES:
        return accel.SERIES[method](n)
    if method == "aitken":
        if n < 3:
            raise UsageError("aitken needs --n >= 3")
        return 4 * accel.aitken_delta2(_ml, n)
    if method == "aitken-iter":
        rounds = 2 if rounds is None else rounds
        if rounds < 1 or n < 2 * rounds + 1:
            raise UsageError(f"aitken-iter needs --rounds >= 1 and --n >= 2*rounds+1")
        return 4 * accel.iterated_aitken(_ml, rounds, n)
    if method == "brouncker":
        return remainder.brouncker_pi(n)
    # averaged
    base = of or "series-c"
    seq: Callable[[int], Fraction] = _raw if base == "raw" else accel.SERIES.get(base)
    if seq is None:
        raise UsageError(f"--of must be one of raw, {', '.join(TABLE_COLUMNS)}")
    if n < 2:
        raise UsageError("averaged needs --n >= 2")
    return accel.consecutive_mean(seq, n)


def rational_json(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def row_json(row) -> dict:
    return {
        "n": row.n,
        "value": rational_json(row.value),
        "decimal": row.rendering.digits,
        "abs_error_bound": rational_json(row.abs_error_bound),
        "abs_error_bound_sci": sci_upper(row.abs_error_bound),
        "correct_digits": row.correct_digits,
    }


def cmd_compute(args) -> int:
    value = method_value(args.method, args.n, args.cf_order, args.rounds, args.of)
    row = make_row(args.n, value, args.digits, args.rounding)
    if args.format == "json":
        out = {"method": args.method, "digits": args.digits, "rounding": Rounding(args.rounding).value}
        out.update(row_json(row))
        print(json.dumps(out, indent=2))
    else:
        print(row.rendering.digits)
        print(f"abs error <= {sci_upper(row.abs_error_bound)} (certified)")
        print(f"correct decimals: {row.correct_digits}")
    return EXIT_OK


def _table_text(reports: Sequence[ConvergenceReport], fmt: str) -> str:
    header = ["n"] + [f"{m[-1]}_n" for m in TABLE_COLUMNS]
    rows = [
        [str(cells[0].n)] + [c.rendering.digits for c in cells]
        for cells in zip(*(r.rows for r in reports))
    ]
    if fmt == "csv":
        return "\n".join(",".join(line) for line in [header] + rows)
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines)


def cmd_table(args) -> int:
    rows = args.rows or list(DEFAULT_ROWS)
    if min(rows) < 1:
        raise UsageError("--rows must be >= 1")
    reports = build_table(rows, args.digits, args.rounding)
    if args.format == "json":
        out = {
            "digits": args.digits,
            "rounding": Rounding(args.rounding).value,
            "columns": [{"method": r.method, "rows": [row_json(x) for x in r.rows]} for r in reports],
        }
        print(json.dumps(out, indent=2))
    else:
        print(_table_text(reports, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import FAIL, WARN, run_suite

    first_failure = None
    counts = {"PASS": 0, "WARN": 0, "FAIL": 0}
    for check in run_suite(args.suite):
        counts[check.status] += 1
        print(check.line(), flush=True)
        if check.status == FAIL and first_failure is None:
            first_failure = check.name
    print(f"summary: {counts['PASS']} passed, {counts[WARN]} warned, {counts[FAIL]} failed")
    if first_failure is not None:
        print(f"FAILED: {first_failure}")
        return EXIT_VERIFY
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _row_list(text: str) -> list[int]:
    try:
        rows = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not rows:
        raise argparse.ArgumentTypeError("empty row list")
    return rows


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="madhava", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    rounding = [r.value for r in Rounding]

    p = sub.add_parser("compute", help="approximate pi by one method")
    p.add_argument("--method", required=True, choices=METHODS)
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--cf-order", type=int, default=None, help="convergent order (corrected; default 3)")
    p.add_argument("--rounds", type=int, default=None, help="delta-squared rounds (aitken-iter; default 2)")
    p.add_argument("--of", default=None, help="base sequence for averaged: raw, series-a, series-b, series-c")
    p.add_argument("--digits", type=_positive, default=13)
    p.add_argument("--rounding", choices=rounding, default=Rounding.TOWARD_ZERO.value)
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="tabulate the three accelerated series")
    p.add_argument("--rows", type=_row_list, default=None, help="comma-separated n values")
    p.add_argument("--digits", type=_positive, default=13)
    p.add_argument("--rounding", choices=rounding, default=Rounding.TOWARD_ZERO.value)
    p.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("madhava", "identities", "table", "all"), default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"madhava: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except accel.UndefinedTransformError as exc:
        print(f"madhava: undefined transform: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED


if __name__ == "__main__":
    sys.exit(main())
