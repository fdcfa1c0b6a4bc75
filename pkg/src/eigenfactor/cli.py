"""Command-line interface.

Exit codes: 0 success, 1 reduction or scan failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import EigenfactorError
from .forms import QExpansionOracle, RecurrenceOracle, load_spec_file, primes_upto
from .numberfield import DEFAULT_PRECISION
from .qseries import DEFAULT_GUARD, delta_qexp
from .reduction import factor_semiprime, reduction_fuzz, scan_nonordinary, scan_vanishing
from .selftest import run_selftest


class UsageError(Exception):
    pass


def _positive(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def _oracle(spec, kind: str, top: int, guard: int):
    if kind == "recurrence":
        return RecurrenceOracle(spec)
    if not spec.is_delta():
        raise UsageError("the qexp oracle only computes Delta (weight 12, level 1)")
    return QExpansionOracle(top + 1, guard)


def cmd_tau(args, out):
    series = delta_qexp(max(args.n + 1, 2), guard=args.guard)
    print(series[args.n], file=out)
    return 0


def cmd_coeff(args, out):
    spec = load_spec_file(args.spec)
    value = RecurrenceOracle(spec).coeff(args.n)
    print(value, file=out)
    print(value.min_poly(), file=out)
    print(value.embed(args.precision).format(args.precision), file=out)
    return 0


def cmd_factor(args, out):
    spec = load_spec_file(args.spec)
    oracle = _oracle(spec, args.oracle, args.n * args.n, args.guard)
    result = factor_semiprime(args.n, spec, oracle)
    print(result.describe(), file=out)
    if result.odd_weight_caveat:
        print("note: odd weight; success is not guaranteed when p^((k-1)/2) divides a(p)", file=out)
    if args.trace:
        print(result.trace.to_json(indent=2), file=sys.stderr)
    if args.trace_out:
        Path(args.trace_out).write_text(result.trace.to_json(indent=2) + "\n")
    return 0 if result.factor is not None else 1


def cmd_delta_qexp(args, out):
    series = delta_qexp(args.T, guard=args.guard)
    lines = "".join(f"{n}\t{series[n]}\n" for n in range(1, args.T))
    if args.out:
        Path(args.out).write_text(lines)
    else:
        out.write(lines)
    return 0


def cmd_scan_zeros(args, out):
    spec = load_spec_file(args.spec)
    scan = scan_vanishing(spec, _oracle(spec, args.oracle, args.X, args.guard), args.X)
    print(f"count: {scan.count}", file=out)
    print("primes: " + " ".join(map(str, scan.primes)), file=out)
    return 0


def cmd_scan_nonordinary(args, out):
    spec = load_spec_file(args.spec)
    if spec.field.degree != 1:
        raise UsageError("scan-nonordinary needs a spec with rational coefficients")
    primes = scan_nonordinary(spec, _oracle(spec, args.oracle, args.X, args.guard), args.X)
    print(" ".join(map(str, primes)), file=out)
    return 0


def cmd_fuzz(args, out):
    spec = load_spec_file(args.spec)
    pool = [p for p in primes_upto(args.pool_max) if p > 2 and spec.level % p]
    report = reduction_fuzz(spec, RecurrenceOracle(spec), pool, args.trials, args.seed)
    print(report.summary(), file=out)
    ok = report.successes == len(report.trials) and not report.invariant_failures
    return 0 if ok else 1


def cmd_selftest(args, out):
    fixtures = Path(args.fixtures) if args.fixtures else None
    results = run_selftest(args.quick, fixtures, emit=lambda s: print(s, file=out))
    failed = [r for r in results if not r[1]]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed", file=out)
    if failed:
        print(f"first failure: {failed[0][0]}", file=out)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="eigenfactor", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def guard(p):
        p.add_argument("--guard", type=_positive, default=DEFAULT_GUARD,
                       help="largest q-expansion truncation allowed (default %(default)s)")

    p = sub.add_parser("tau", help="print tau(n)")
    p.add_argument("n", type=_positive)
    guard(p)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("coeff", help="print a(n), its minimal polynomial and an approximation")
    p.add_argument("spec")
    p.add_argument("n", type=_positive)
    p.add_argument("--precision", type=_positive, default=DEFAULT_PRECISION)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("factor", help="run the reduction on n")
    p.add_argument("spec")
    p.add_argument("n", type=_positive)
    p.add_argument("--oracle", choices=("qexp", "recurrence"), default="recurrence")
    p.add_argument("--trace", action="store_true", help="write the JSON trace to stderr")
    p.add_argument("--trace-out", metavar="FILE", help="write the JSON trace to FILE")
    guard(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("delta-qexp", help="dump tau(1..T-1) as 'n<TAB>value' lines")
    p.add_argument("T", type=_positive)
    p.add_argument("--out", metavar="FILE")
    guard(p)
    p.set_defaults(func=cmd_delta_qexp)

    for name, func, default in (("scan-zeros", cmd_scan_zeros, "qexp"),
                                ("scan-nonordinary", cmd_scan_nonordinary, "recurrence")):
        p = sub.add_parser(name)
        p.add_argument("spec")
        p.add_argument("X", type=_positive)
        p.add_argument("--oracle", choices=("qexp", "recurrence"), default=default)
        guard(p)
        p.set_defaults(func=func)

    p = sub.add_parser("fuzz", help="run the reduction on random semiprimes")
    p.add_argument("spec")
    p.add_argument("--pool-max", type=_positive, default=97)
    p.add_argument("--trials", type=_positive, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("selftest", help="reproduce the worked examples and run the bundled checks")
    p.add_argument("--quick", action="store_true", help="skip the 10^4 vanishing scan")
    p.add_argument("--fixtures", metavar="DIR", help="read delta.json and g29.json from DIR")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, EigenfactorError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
