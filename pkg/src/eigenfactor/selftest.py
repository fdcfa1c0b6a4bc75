"""Bundled end-to-end checks: both worked examples, oracle agreement, fuzzing, scans."""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Callable

from .forms import QExpansionOracle, RecurrenceOracle, load_spec_file, primes_upto
from .reduction import Outcome, check_trace, factor_semiprime, reduction_fuzz, scan_nonordinary, scan_vanishing


def _spec(fixtures: Path | None, name: str):
    return load_spec_file(fixtures / name if fixtures else name)


def _expect(got, want, what):
    if got != want:
        raise AssertionError(f"{what}: expected {want}, got {got}")


def check_example_1(fixtures=None):
    spec = _spec(fixtures, "delta.json")
    oracle = QExpansionOracle(226)
    _expect(oracle.coeff(15), 1217160, "tau(15)")
    _expect(oracle.coeff(225), 2897808426675, "tau(225)")
    out = factor_semiprime(15, spec, oracle)
    tr = out.trace
    _expect(tr.alpha_sq, Fraction(81288256, 474609375), "alpha^2")
    _expect(tr.beta, Fraction(1431016507, 4271484375), "beta")
    _expect(tr.candidates[0], Fraction(933156, 1953125), "x^2")
    _expect(tr.denominators[0], 1953125, "denominator of x^2")
    _expect(tr.gcds[0], 5, "gcd(1953125, 15)")
    _expect((out.kind, out.factor), (Outcome.FACTOR, 5), "outcome")


def check_example_2(fixtures=None):
    spec = _spec(fixtures, "g29.json")
    K = spec.field
    oracle = RecurrenceOracle(spec)
    _expect(oracle.coeff(4), K("-2*g - 7"), "a(4)")
    _expect(oracle.coeff(15), K("-5*g - 4"), "a(15)")
    _expect(oracle.coeff(225), K("-2680*g - 6168"), "a(225)")
    out = factor_semiprime(15, spec, oracle)
    want = {K("(73/27) + (30/27)*g"), K("(17/125) + (-40/125)*g")}
    _expect(set(out.trace.candidates), want, "x^2 candidates")
    if out.factor not in (3, 5):
        raise AssertionError(f"expected a factor of 15, got {out.describe()}")


def check_oracle_equivalence(fixtures=None, bound=1000):
    spec = _spec(fixtures, "delta.json")
    rec = RecurrenceOracle(spec)
    qexp = QExpansionOracle(bound + 1)
    for n in range(1, bound + 1):
        if rec.supports(n) and rec.coeff(n) != qexp.coeff(n):
            raise AssertionError(f"recurrence and q-expansion disagree at n = {n}")


def check_fuzz(fixtures=None, trials=200, seed=0):
    spec = _spec(fixtures, "delta.json")
    report = reduction_fuzz(spec, RecurrenceOracle(spec), [p for p in primes_upto(97) if p > 2], trials, seed)
    _expect(report.successes, trials, "fuzz successes")
    for t in report.trials:
        if check_trace(t.outcome.trace) or t.invariant_failures:
            raise AssertionError(f"trace invariants fail for {t.p}*{t.q}: {t.invariant_failures}")


def check_nonordinary(fixtures=None):
    spec = _spec(fixtures, "delta.json")
    _expect(scan_nonordinary(spec, RecurrenceOracle(spec), 100), [2, 3, 5, 7], "non-ordinary primes <= 100")


def check_vanishing(fixtures=None, bound=10**4):
    spec = _spec(fixtures, "delta.json")
    scan = scan_vanishing(spec, QExpansionOracle(bound + 1), bound)
    _expect(scan.count, 0, f"primes p <= {bound} with tau(p) = 0")


CHECKS: list[tuple[str, Callable, bool]] = [
    ("example-1", check_example_1, False),
    ("example-2", check_example_2, False),
    ("oracle-equivalence", check_oracle_equivalence, False),
    ("fuzz", check_fuzz, False),
    ("non-ordinary-scan", check_nonordinary, False),
    ("vanishing-scan", check_vanishing, True),
]


def run_selftest(quick: bool = False, fixtures: Path | None = None, emit=print) -> list[tuple[str, bool, str]]:
    results = []
    for name, fn, slow in CHECKS:
        if quick and slow:
            continue
        try:
            fn(fixtures)
        except Exception as exc:  # every failure is reported, not raised
            results.append((name, False, f"{type(exc).__name__}: {exc}"))
            emit(f"FAIL {name}: {type(exc).__name__}: {exc}")
        else:
            results.append((name, True, ""))
            emit(f"PASS {name}")
    return results
