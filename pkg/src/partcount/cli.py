"""Command-line front end.

Exit codes: 0 success, 1 wrong answer (mismatch, inexact division, corrupt
cache), 2 bad invocation.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import counts
from .cache import CacheError, ResultCache, resolve_path
from .errors import DomainError, InconsistencyError, UnsupportedSizeError
from .verify import Mismatch, run_all

BENCH_METHODS = ("partial-bell", "complete-bell", "determinant", "recurrence", "oracle-series")


class UsageError(Exception):
    pass


def _add_family(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", choices=counts.FAMILIES)
    p.add_argument("--k", type=int, help="number of colours (colored family only)")


def _check_family_k(args) -> None:
    if args.family == "colored" and args.k is None:
        raise UsageError("--k is required for the colored family")
    if args.family == "plane" and args.k is not None:
        raise UsageError("--k is not accepted for the plane family")
    if args.k is not None and args.k < 0:
        raise UsageError("--k must be >= 0")


def build_parser() -> argparse.ArgumentParser:
    cache_help = "append-only result cache (default: $PARTCOUNT_CACHE)"
    # accepted on either side of the subcommand; separate dests so neither clobbers the other
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", dest="sub_cache", default=None, metavar="PATH", help=cache_help)

    parser = argparse.ArgumentParser(prog="partcount", description=__doc__.splitlines()[0])
    parser.add_argument("--cache", default=None, metavar="PATH", help=cache_help)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="print one exact count")
    _add_family(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=counts.METHODS, default=counts.DEFAULT_METHOD)
    p.add_argument("--json", action="store_true", help="emit a JSON object instead of the bare value")

    p = sub.add_parser("table", parents=[common], help="write n = 0..max_n as CSV")
    _add_family(p)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--out", required=True, help="CSV path, '-' for stdout")

    p = sub.add_parser("verify", parents=[common], help="cross-method verification sweep")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)

    p = sub.add_parser("bench", parents=[common], help="time methods on a doubling ladder of n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--methods", default="recurrence",
                   help="comma-separated subset of " + ",".join(BENCH_METHODS))
    p.add_argument("--family", choices=counts.FAMILIES, default="colored")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--out", required=True, help="CSV path, '-' for stdout")
    return parser


def _open_out(path: str):
    if path == "-":
        return sys.stdout, False
    try:
        return open(path, "w", newline="", encoding="utf-8"), True
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from None


def cmd_count(args) -> int:
    _check_family_k(args)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    path = resolve_path(args.sub_cache or args.cache)
    cache = ResultCache.open(path) if path else None
    value = cache.get(args.family, args.k, args.n) if cache is not None else None
    if value is None:
        value = counts.count(args.family, args.n, args.k, args.method).value
        if cache is not None:
            cache.store(args.family, args.k, args.n, value)
    if args.json:
        obj = {"family": args.family, "k": args.k, "n": args.n, "method": args.method, "value": str(value)}
        print(json.dumps(obj))
    else:
        print(value)
    return 0


def cmd_table(args) -> int:
    _check_family_k(args)
    if args.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    if args.family == "colored":
        values = counts.colored_counts(args.k, args.max_n)
    else:
        values = counts.plane_counts(args.max_n)
    fh, close = _open_out(args.out)
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["family", "k", "n", "value"])
        for n, v in enumerate(values):
            w.writerow([args.family, args.k or 0, n, v])
    finally:
        if close:
            fh.close()
    return 0


def cmd_verify(args) -> int:
    if args.max_n < 1 or args.max_k < 1:
        raise UsageError("--max-n and --max-k must be >= 1")
    try:
        for summary in run_all(args.max_n, args.max_k):
            print(summary.line(), flush=True)
    except Mismatch as exc:
        print(f"FAIL {exc}", file=sys.stderr)
        return 1
    print("all checks passed")
    return 0


def ladder(max_n: int) -> list[int]:
    """1, 2, 4, ... up to max_n, always ending at max_n."""
    out, n = [], 1
    while n < max_n:
        out.append(n)
        n *= 2
    if max_n >= 1:
        out.append(max_n)
    return out


def _timed(family, k, n, method):
    counts.clear_memo()
    counts._pentagonal_table.cache_clear()
    t0 = time.perf_counter_ns()
    value = counts.count(family, n, k, method).value
    return value, (time.perf_counter_ns() - t0) // 1000


def cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    bad = [m for m in methods if m not in BENCH_METHODS]
    if not methods or bad:
        raise UsageError(f"unknown bench method(s): {', '.join(bad) or '(none)'}")
    if args.family == "plane" and "partial-bell" in methods:
        raise UsageError("partial-bell applies to the colored family only")
    if args.family == "colored" and args.k is None:
        args.k = 1
    _check_family_k(args)
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    rows = []
    for n in ladder(args.max_n):
        timed = {m: _timed(args.family, args.k, n, m) for m in methods}
        vals = {m: v for m, (v, _) in timed.items()}
        if len(set(vals.values())) != 1:
            raise Mismatch("bench", args.family, args.k, n, vals)
        for m, (v, us) in timed.items():
            rows.append([args.family, args.k or 0, n, m, us, len(str(v))])
    fh, close = _open_out(args.out)
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["family", "k", "n", "method", "wall_time_us", "value_digits"])
        w.writerows(rows)
    finally:
        if close:
            fh.close()
    return 0


COMMANDS = {"count": cmd_count, "table": cmd_table, "verify": cmd_verify, "bench": cmd_bench}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DomainError, UnsupportedSizeError) as exc:
        print(f"partcount: error: {exc}", file=sys.stderr)
        return 2
    except (InconsistencyError, CacheError, Mismatch) as exc:
        print(f"partcount: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
