"""Command-line front end.

Subcommands: ``bernoulli`` (table), ``faulhaber`` (closed forms, single k
or a range), ``sum`` (exact evaluation by either strategy), ``verify``
(exhaustive cross-checks), ``bench`` (closed vs. naive timing), ``divide``
(polynomial divisibility reports) and ``sweep`` (value-level divisibility
search).

Exit codes are a stable contract: 0 success, 1 verification or data
failure, 2 usage error.  Computed Bernoulli numbers persist in a small
cache file between runs unless ``--cache none`` is given.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from statistics import median

from .analysis import (
    DIVISOR_N2_N12,
    DIVISOR_N_N1,
    DIVISOR_N_N1_2N1,
    check_problem2,
    check_problem3,
    check_problem4,
    factored_form,
    factored_to_json,
    format_factored,
    report_to_json,
    value_divisibility,
)
from .bernoulli import (
    BernoulliCache,
    CacheCorruptionError,
    bernoulli,
    bernoulli_range,
    recurrence_residual,
)
from .exact_arith import format_rational, format_rational_latex
from .faulhaber import (
    faulhaber_poly,
    format_polynomial,
    format_power_sum,
    poly_to_json,
    power_sum_closed,
    power_sum_naive,
    telescope_residual,
)

__all__ = ["BenchResult", "main", "run_benchmark"]

NAIVE_GUARD_LIMIT = 10**8

_RANGE_RE = re.compile(r"^(\d+)\.\.(\d+)$")

_SWEEP_DIVISORS = {
    "p2": ("n(n+1)", DIVISOR_N_N1),
    "p3": ("n^2(n+1)^2", DIVISOR_N2_N12),
    "p4": ("n(n+1)(2n+1)", DIVISOR_N_N1_2N1),
}


@dataclass(frozen=True)
class BenchResult:
    """Median wall times for both power-sum strategies on one (n, k)."""

    n: int
    k: int
    closed_time: float
    naive_time: float
    values_equal: bool


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return value


def _pos_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _k_range(text: str) -> tuple[int, int]:
    match = _RANGE_RE.match(text)
    if match is None:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def default_cache_path() -> Path:
    """Per-user cache location, honoring $XDG_CONFIG_HOME."""
    root = os.environ.get("XDG_CONFIG_HOME")
    base = Path(root).expanduser() if root else Path.home() / ".config"
    return base / "powersums" / "bernoulli.cache"


def _open_cache(choice: str | None) -> tuple[BernoulliCache, Path | None]:
    """Resolve --cache: 'none' disables persistence, default is per-user."""
    if choice == "none":
        return BernoulliCache(), None
    path = default_cache_path() if choice is None else Path(choice)
    if path.exists():
        return BernoulliCache.load(path), path
    return BernoulliCache(), path


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powersums",
        description="Exact Bernoulli numbers and closed-form power sums.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--cache",
        metavar="PATH",
        default=None,
        help="Bernoulli cache file ('none' disables persistence; "
        "default: a per-user config file)",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format",
        choices=("plain", "json", "latex"),
        default="plain",
        help="output format (default: plain)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "bernoulli",
        parents=[common, fmt],
        help="print B_0..B_max",
        description="Print the Bernoulli numbers B_0..B_max. The recurrence "
        "costs O(max^2) rational operations, so indices beyond ~1000 get slow.",
    )
    p.add_argument("--max", type=_nonneg_int, required=True, help="largest index")
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser(
        "faulhaber",
        parents=[common, fmt],
        help="print closed-form power-sum polynomials",
        description="Print the closed-form polynomial for 1^k + ... + n^k, "
        "expanded or factored. Every polynomial is checked against direct "
        "summation at n = 1..50 before printing.",
    )
    p.add_argument("k", type=_nonneg_int, nargs="?", help="single exponent")
    p.add_argument("--range", type=_k_range, metavar="A..B", help="exponent range")
    p.add_argument("--factored", action="store_true", help="emit factored form")
    p.set_defaults(func=cmd_faulhaber)

    p = sub.add_parser(
        "sum",
        parents=[common],
        help="evaluate a power sum exactly",
        description="Evaluate 1^k + ... + n^k exactly.",
    )
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("k", type=_nonneg_int)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument(
        "--closed", action="store_const", dest="mode", const="closed",
        help="closed form (default)",
    )
    mode.add_argument(
        "--naive", action="store_const", dest="mode", const="naive",
        help="direct summation",
    )
    mode.add_argument(
        "--check", action="store_const", dest="mode", const="check",
        help="run both and require agreement",
    )
    p.add_argument(
        "--force", action="store_true",
        help=f"allow direct summation past n = {NAIVE_GUARD_LIMIT}",
    )
    p.set_defaults(func=cmd_sum, mode="closed")

    p = sub.add_parser(
        "verify",
        parents=[common],
        help="run the exhaustive verification suites",
        description="Cross-check the closed form against direct summation on "
        "the full (n, k) grid, plus the recurrence identity, the telescoping "
        "identity, odd-index zeros, and the polynomial divisibility suites.",
    )
    p.add_argument("--max-n", type=_nonneg_int, default=200)
    p.add_argument("--max-k", type=_nonneg_int, default=30)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "bench",
        parents=[common],
        help="time closed form vs. direct summation",
        description="Median-of-iters wall time for both strategies; aborts "
        "if the two values ever disagree.",
    )
    p.add_argument("--n", type=_pos_int, required=True)
    p.add_argument("--k", type=_nonneg_int, required=True)
    p.add_argument("--iters", type=_pos_int, default=3)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser(
        "divide",
        parents=[common, fmt],
        help="polynomial divisibility report",
        description="Divide a power-sum polynomial by its structural divisor: "
        "problem 2 is S^k / n(n+1), problem 3 is S^(2k+1) / n^2(n+1)^2, "
        "problem 4 is S^(2k) / n(n+1)(2n+1).",
    )
    p.add_argument("problem", type=int, choices=(2, 3, 4))
    p.add_argument("k", type=_pos_int, help="problem parameter k >= 1")
    p.set_defaults(func=cmd_divide)

    p = sub.add_parser(
        "sweep",
        parents=[common, fmt],
        help="search integer-value divisibility",
        description="Tabulate the (n, k) pairs, n <= max-n and k <= max-k, "
        "for which the chosen divisor evaluated at n divides the integer "
        "value of the power sum. Unlike the polynomial statements this holds "
        "only sporadically.",
    )
    p.add_argument("--max-n", type=_pos_int, required=True)
    p.add_argument("--max-k", type=_nonneg_int, required=True)
    p.add_argument("--divisor", choices=sorted(_SWEEP_DIVISORS), default="p4")
    p.set_defaults(func=cmd_sweep)

    return parser


def cmd_bernoulli(args: argparse.Namespace, cache: BernoulliCache) -> int:
    values = bernoulli_range(args.max, cache)
    if args.format == "json":
        print(
            json.dumps(
                [{"n": i, "value": format_rational(v)} for i, v in enumerate(values)],
                separators=(",", ":"),
            )
        )
    elif args.format == "latex":
        for i, v in enumerate(values):
            print(f"B_{{{i}}} = {format_rational_latex(v)}")
    else:
        for i, v in enumerate(values):
            print(f"B_{i} = {v}")
    return 0


def _oracle_mismatch(poly, k: int) -> int | None:
    """First n in 1..50 where poly(n) differs from the running power sum."""
    running = 0
    for n in range(1, 51):
        running += n**k
        if poly(n) != running:
            return n
    return None


def cmd_faulhaber(args: argparse.Namespace, cache: BernoulliCache) -> int:
    if (args.k is None) == (args.range is None):
        print("error: provide exactly one of K or --range", file=sys.stderr)
        return 2
    ks = [args.k] if args.k is not None else list(range(args.range[0], args.range[1] + 1))
    lines: list[str] = []
    entries: list[dict] = []
    for k in ks:
        poly = faulhaber_poly(k, cache)
        bad = _oracle_mismatch(poly, k)
        if bad is not None:
            print(
                f"internal error: closed form for k={k} disagrees with direct "
                f"summation at n={bad}",
                file=sys.stderr,
            )
            return 1
        if args.factored:
            form = factored_form(k, cache)
            if args.format == "json":
                entries.append(factored_to_json(form))
            else:
                lines.append(format_factored(form, style=args.format))
        else:
            if args.format == "json":
                entries.append(poly_to_json(poly, k=k))
            else:
                lines.append(format_power_sum(k, poly, style=args.format))
    if args.format == "json":
        payload = entries[0] if args.k is not None else entries
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for line in lines:
            print(line)
    return 0


def cmd_sum(args: argparse.Namespace, cache: BernoulliCache) -> int:
    runs_naive = args.mode in ("naive", "check")
    if runs_naive and args.n > NAIVE_GUARD_LIMIT and not args.force:
        print(
            f"error: direct summation past n = {NAIVE_GUARD_LIMIT} can run for "
            "a very long time; pass --force to do it anyway",
            file=sys.stderr,
        )
        return 2
    if args.mode == "naive":
        value = power_sum_naive(args.n, args.k)
    elif args.mode == "closed":
        value = power_sum_closed(args.n, args.k, cache)
    else:
        value = power_sum_closed(args.n, args.k, cache)
        oracle = power_sum_naive(args.n, args.k)
        if value != oracle:
            print(
                f"MISMATCH at n={args.n}, k={args.k}: closed {value} != naive {oracle}",
                file=sys.stderr,
            )
            return 1
    print(value)
    return 0


def cmd_verify(args: argparse.Namespace, cache: BernoulliCache) -> int:
    max_n, max_k = args.max_n, args.max_k
    total = 0

    grid = 0
    for k in range(max_k + 1):
        running = 0
        for n in range(max_n + 1):
            if n:
                running += n**k
            closed = power_sum_closed(n, k, cache)
            if closed != running:
                print(f"FAIL power sum at n={n}, k={k}: closed {closed} != {running}")
                return 1
            grid += 1
    print(f"power sums        {grid} comparisons ok")
    total += grid

    for n in range(1, max_k + 1):
        if recurrence_residual(n, cache) != 0:
            print(f"FAIL recurrence identity at n={n}")
            return 1
    print(f"recurrence        {max_k} identities ok")
    total += max_k

    for k in range(max_k + 1):
        if not telescope_residual(k, cache).is_zero():
            print(f"FAIL telescoping identity at k={k}")
            return 1
    print(f"telescoping       {max_k + 1} identities ok")
    total += max_k + 1

    for m in range(1, max_k + 1):
        if bernoulli(2 * m + 1, cache) != 0:
            print(f"FAIL odd-index zero at index {2 * m + 1}")
            return 1
    print(f"odd-index zeros   {max_k} checks ok")
    total += max_k

    checks = 0
    for k in range(1, max_k + 1):
        report = check_problem2(k, cache)
        if not report.divides or report.divisor * report.quotient != faulhaber_poly(k, cache):
            print(f"FAIL divisibility by n(n+1) at k={k}")
            return 1
        checks += 1
    for k in range(1, (max_k - 1) // 2 + 1):
        report = check_problem3(k, cache)
        if not report.divides or report.divisor * report.quotient != faulhaber_poly(2 * k + 1, cache):
            print(f"FAIL divisibility by n^2(n+1)^2 at exponent {2 * k + 1}")
            return 1
        checks += 1
    for k in range(1, max_k // 2 + 1):
        report = check_problem4(k, cache)
        if not report.divides or report.divisor * report.quotient != faulhaber_poly(2 * k, cache):
            print(f"FAIL divisibility by n(n+1)(2n+1) at exponent {2 * k}")
            return 1
        checks += 1
    print(f"divisibility      {checks} divisions ok")
    total += checks

    print(f"all checks passed ({total} total)")
    return 0


def run_benchmark(
    n: int, k: int, iters: int, cache: BernoulliCache | None = None
) -> BenchResult:
    """Median-of-iters wall times for both strategies on one (n, k)."""
    if n < 1 or iters < 1:
        raise ValueError("n and iters must be positive")
    cache = cache if cache is not None else BernoulliCache()
    bernoulli(k, cache)  # warm the table so timings measure evaluation only
    closed_times: list[float] = []
    naive_times: list[float] = []
    closed_values: list[int] = []
    naive_values: list[int] = []
    for _ in range(iters):
        start = time.perf_counter()
        closed_values.append(power_sum_closed(n, k, cache))
        closed_times.append(time.perf_counter() - start)
    for _ in range(iters):
        start = time.perf_counter()
        naive_values.append(power_sum_naive(n, k))
        naive_times.append(time.perf_counter() - start)
    values = set(closed_values) | set(naive_values)
    return BenchResult(
        n=n,
        k=k,
        closed_time=median(closed_times),
        naive_time=median(naive_times),
        values_equal=len(values) == 1,
    )


def cmd_bench(args: argparse.Namespace, cache: BernoulliCache) -> int:
    result = run_benchmark(args.n, args.k, args.iters, cache)
    if not result.values_equal:
        print(
            f"MISMATCH at n={args.n}, k={args.k}: the two strategies disagree",
            file=sys.stderr,
        )
        return 1
    speedup = (
        result.naive_time / result.closed_time
        if result.closed_time > 0
        else float("inf")
    )
    print(f"n={result.n} k={result.k} iters={args.iters}")
    print(f"closed : {result.closed_time:.6g} s")
    print(f"naive  : {result.naive_time:.6g} s")
    print(f"speedup: {speedup:.3g}x")
    print("values agree: yes")
    return 0


def cmd_divide(args: argparse.Namespace, cache: BernoulliCache) -> int:
    checker = {2: check_problem2, 3: check_problem3, 4: check_problem4}[args.problem]
    report = checker(args.k, cache)
    if args.format == "json":
        print(json.dumps(report_to_json(report), separators=(",", ":")))
        return 0
    style = args.format
    print(f"exponent  : {report.k}")
    print(f"divisor   : {format_polynomial(report.divisor, style=style)}")
    print(f"divides   : {'yes' if report.divides else 'no'}")
    print(f"quotient  : {format_polynomial(report.quotient, style=style)}")
    print(f"remainder : {format_polynomial(report.remainder, style=style)}")
    return 0


def cmd_sweep(args: argparse.Namespace, cache: BernoulliCache) -> int:
    label, divisor = _SWEEP_DIVISORS[args.divisor]
    hits = [
        {"n": n, "k": k}
        for n in range(1, args.max_n + 1)
        for k in range(args.max_k + 1)
        if value_divisibility(n, k, divisor, cache)
    ]
    if args.format == "json":
        print(json.dumps({"divisor": label, "hits": hits}, separators=(",", ":")))
        return 0
    print(f"value divisibility by {label}: {len(hits)} of "
          f"{args.max_n * (args.max_k + 1)} pairs")
    for hit in hits:
        print(f"n={hit['n']} k={hit['k']}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cache, cache_path = _open_cache(args.cache)
    except CacheCorruptionError as exc:
        print(f"error: corrupt cache: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: cannot read cache: {exc}", file=sys.stderr)
        return 1
    known_before = len(cache)
    code = args.func(args, cache)
    if cache_path is not None and len(cache) > known_before:
        try:
            cache_path.parent.mkdir(parents=True, exist_ok=True)
            cache.save(cache_path)
        except OSError as exc:
            print(f"warning: could not save cache: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
