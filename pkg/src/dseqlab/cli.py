"""Command-line front end.

Standard output carries only the data product; progress, warnings and errors
go to standard error. Exit codes: 0 success, 2 usage or domain error,
3 terminating expansion, 4 budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time

from . import bitcensus, dseq, recipcensus, zeta
from .errors import BudgetExceeded, CapacityError, DomainError, TerminatingExpansionError
from .modarith import DEFAULT_SEED
from .primes import PrimeRange

EXIT_OK, EXIT_USAGE, EXIT_TERMINATING, EXIT_BUDGET = 0, 2, 3, 4


def _default_threads() -> int:
    env = os.environ.get("DSEQ_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _positive_real(text: str) -> float:
    if "j" in text.lower():
        raise argparse.ArgumentTypeError("complex s (Riemann direction) is out of scope")
    try:
        s = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None
    if not s > 0 or math.isinf(s):
        raise argparse.ArgumentTypeError(f"s must be a finite positive real, got {text}")
    return s


def _width(text: str) -> int:
    w = int(text)
    if not 2 <= w <= bitcensus.MAX_WIDTH:
        raise argparse.ArgumentTypeError(f"must be in 2..{bitcensus.MAX_WIDTH}, got {w}")
    return w


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "%.17g" % v
    return str(v)


def _jsonable(v):
    if isinstance(v, float):
        return None if math.isnan(v) or math.isinf(v) else float("%.17g" % v)
    return v


class _Emitter:
    """Writes flat records as CSV, JSON lines, or an aligned table."""

    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    def rows(self, header: list[str], rows: list[list], trailer: list[tuple[str, object]] = ()):
        if self.fmt == "json":
            for r in rows:
                self.out.write(json.dumps({k: _jsonable(v) for k, v in zip(header, r)}) + "\n")
            for key, val in trailer:
                self.out.write(json.dumps({key: _jsonable(val)}) + "\n")
        elif self.fmt == "csv":
            w = csv.writer(self.out, lineterminator="\n")
            w.writerow(header)
            w.writerows([_fmt(v) for v in r] for r in rows)
            for key, val in trailer:
                self.out.write(f"# {key},{_fmt(val)}\n")
        else:
            cells = [header] + [[_fmt(v) for v in r] for r in rows]
            widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
            for c in cells:
                self.out.write("  ".join(x.rjust(n) for x, n in zip(c, widths)).rstrip() + "\n")
            for key, val in trailer:
                self.out.write(f"{key}: {_fmt(val)}\n")


class _ProgressPrinter:
    def __init__(self, label: str, every: float = 1.0):
        self.label = label
        self.every = every
        self.last = 0.0

    def __call__(self, done: int, total: int) -> None:
        now = time.monotonic()
        if done == total or now - self.last >= self.every:
            self.last = now
            print(f"{self.label}: {done}/{total} primes", file=sys.stderr)


def _range(args) -> PrimeRange:
    return PrimeRange(args.lo, args.hi)


def cmd_bit_census(args, emit: _Emitter) -> int:
    start = time.monotonic()
    rows = []
    status = EXIT_OK
    for row in bitcensus.iter_bit_census_rows(args.max_width, args.mode, min_width=2, threads=args.threads):
        rows.append(row)
        if args.budget is not None and time.monotonic() - start > args.budget and row.width < args.max_width:
            print(
                f"warning: budget of {args.budget}s exhausted; skipped widths {row.width + 1}..{args.max_width}",
                file=sys.stderr,
            )
            status = EXIT_BUDGET
            break
    if args.series:
        emit.rows(["width", "ones_fraction"], [[r.width, r.ones_fraction] for r in rows])
    else:
        emit.rows(["width", "zeros", "ones", "total"], [[r.width, r.zeros, r.ones, r.total] for r in rows])
    return status


RECIP_HEADER = ["lo", "hi", "base", "prime_count", "zeros_exceed", "ones_exceed", "equal", "max_length", "excluded"]


def cmd_recip_census(args, emit: _Emitter) -> int:
    c = recipcensus.imbalance_census(
        _range(args),
        threads=args.threads,
        seed=args.seed,
        progress=_ProgressPrinter("recip-census"),
        budget=args.budget,
    )
    emit.rows(
        RECIP_HEADER,
        [[c.range.lo, c.range.hi, c.base, c.prime_count, c.zeros_exceed, c.ones_exceed, c.equal, c.max_length_count, c.excluded]],
    )
    if emit.fmt == "table":
        emit.out.write(f"zeros_exceed/ones_exceed: {_fmt(c.ratio)}\n")
    return EXIT_OK


def cmd_expand(args, emit: _Emitter) -> int:
    digits = dseq.expand(args.p, args.base, args.digits, args.rule)
    prof = dseq.profile(args.p, args.base, args.rule, seed=args.seed)
    sep = "" if args.base <= 10 else ","
    text = sep.join(str(d) for d in digits)
    if emit.fmt == "json":
        record = {
            "p": args.p,
            "base": args.base,
            "rule": prof.rule.value,
            "digits": text,
            "period": prof.period,
            "max_length": prof.max_length,
        }
        emit.out.write(json.dumps(record) + "\n")
    else:
        emit.out.write(text + "\n")
        emit.out.write(f"# period={prof.period},max_length={_fmt(prof.max_length)}\n")
    return EXIT_OK


def cmd_runs(args, emit: _Emitter) -> int:
    runs = recipcensus.find_nonmax_runs(
        _range(args),
        base=args.base,
        min_length=args.min_len,
        threads=args.threads,
        seed=args.seed,
        progress=_ProgressPrinter("runs"),
        budget=args.budget,
        criterion=args.criterion,
    )
    emit.rows(
        ["start_prime", "end_prime", "length", "boundary_truncated"],
        [[r.start_prime, r.end_prime, r.length, r.boundary_truncated] for r in runs],
    )
    return EXIT_OK


_ZETA_FORMS = {
    "sum": zeta.zeta_partial_sum,
    "product": zeta.euler_product_inverse,
    "mobius-sum": zeta.mobius_partial_sum,
}


def cmd_zeta(args, emit: _Emitter) -> int:
    if args.cutoff < 1:
        raise DomainError("--cutoff must be >= 1")
    if args.form == "log":
        z = zeta.euler_product_inverse(args.s, args.cutoff)
        # the log form reports the log-sum itself as the value
        z = zeta.ZetaPartial(z.s, z.cutoff_kind, z.cutoff, z.log_value, z.log_value)
    else:
        z = _ZETA_FORMS[args.form](args.s, args.cutoff)
    emit.rows(
        ["s", "cutoff_kind", "cutoff", "value", "log_value"],
        [[z.s, z.cutoff_kind.value, z.cutoff, z.value, z.log_value]],
    )
    return EXIT_OK


def cmd_digit_totals(args, emit: _Emitter) -> int:
    if args.base < 2:
        raise DomainError("--base must be >= 2")
    t = recipcensus.digit_totals(
        _range(args),
        base=args.base,
        rule=args.rule,
        threads=args.threads,
        seed=args.seed,
        progress=_ProgressPrinter("digit-totals"),
        budget=args.budget,
    )
    emit.rows(["digit", "count"], [[d, c] for d, c in enumerate(t.totals)], trailer=[("excluded", t.excluded)])
    return EXIT_OK


def cmd_mobius(args, emit: _Emitter) -> int:
    table = zeta.mobius_sieve(args.limit)
    emit.rows(["n", "mu"], [[n, int(v)] for n, v in enumerate(table.values.tolist()) if n >= 1])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json", "table"], default="csv")
    common.add_argument("--threads", type=int, default=_default_threads(), help="worker threads (env DSEQ_THREADS)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized factoring")
    common.add_argument("--budget", type=float, default=None, metavar="SECONDS", help="wall-clock limit")

    rng = argparse.ArgumentParser(add_help=False)
    rng.add_argument("--lo", type=int, required=True)
    rng.add_argument("--hi", type=int, required=True)

    rules = [r.value for r in dseq.DigitRule]
    parser = argparse.ArgumentParser(prog="dseq", description="Prime reciprocal digit statistics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bit-census", parents=[common], help="0/1 counts over binary forms of primes")
    p.add_argument("--max-width", type=_width, required=True)
    p.add_argument("--mode", choices=["constant", "variable"], default="constant")
    p.add_argument("--series", action="store_true", help="emit width,ones_fraction instead of counts")
    p.set_defaults(func=cmd_bit_census)

    p = sub.add_parser("recip-census", parents=[common, rng], help="base-2 digit balance census")
    p.set_defaults(func=cmd_recip_census)

    p = sub.add_parser("expand", parents=[common], help="digits of 1/p")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--rule", choices=rules, default="expansion")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("runs", parents=[common, rng], help="runs of consecutive non-maximum-length primes")
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--min-len", type=int, default=1)
    p.add_argument("--criterion", choices=[c.value for c in recipcensus.RunCriterion], default="order")
    p.set_defaults(func=cmd_runs)

    p = sub.add_parser("zeta", parents=[common], help="truncated zeta sums and Euler products")
    p.add_argument("--form", choices=["sum", "product", "log", "mobius-sum"], required=True)
    p.add_argument("--s", type=_positive_real, required=True)
    p.add_argument("--cutoff", type=int, required=True)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("digit-totals", parents=[common, rng], help="per-digit totals over reciprocal periods")
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--rule", choices=rules, default="expansion")
    p.set_defaults(func=cmd_digit_totals)

    p = sub.add_parser("mobius", parents=[common], help="table of mu(n)")
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_mobius)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    emit = _Emitter(args.format, out)
    try:
        return args.func(args, emit)
    except TerminatingExpansionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TERMINATING
    except (DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
