"""Recover a prime factor of n = pq from a(n) and a(n^2) of a Hecke eigenform.

With x = a(p)/(chi(p) p^((k-1)/2)) and y likewise for q, the quantities

    A = a(n)/chi(n)            B = a(n^2) = n^(k-1) chi(n) (x^2 - 1)(y^2 - 1)

make x^2 and y^2 the two roots t of

    chi(n) n^(k-1) t^2 - S t + A^2 / chi(n) = 0,   S = A^2 chi(n) - B + n^(k-1) chi(n).

Each root lies in the coefficient field, and its denominator shares the
factor p (resp. q) with n. Only the squares are ever formed; x and y
themselves need sqrt(p) and are never materialised.
"""
from __future__ import annotations

import enum
import json
import math
import random
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import EigenfactorError, InvariantViolation
from .forms import CoefficientOracle, EigenformSpec, primes_upto
from .numberfield import AlgebraicNumber, sqrt_in_field


class Outcome(enum.Enum):
    FACTOR = "Factor"
    TRIVIAL_GCD_WITH_LEVEL = "TrivialGcdWithLevel"
    BOTH_COEFFICIENTS_VANISH = "BothCoefficientsVanish"
    NO_USABLE_DENOMINATOR = "NoUsableDenominator"
    NO_SQUARE_ROOT_IN_FIELD = "NoSquareRootInField"
    UNSUPPORTED_INPUT = "UnsupportedInput"


@dataclass
class ReductionTrace:
    n: int
    k: int
    level: int
    chi_n: AlgebraicNumber | None = None
    A: AlgebraicNumber | None = None
    B: AlgebraicNumber | None = None
    S: AlgebraicNumber | None = None
    radicand: AlgebraicNumber | None = None
    sqrt_radicand: AlgebraicNumber | None = None
    candidates: list = dc_field(default_factory=list)
    denominators: list = dc_field(default_factory=list)
    gcds: list = dc_field(default_factory=list)
    outcome: Outcome | None = None

    @property
    def alpha_sq(self) -> AlgebraicNumber | None:
        """alpha^2 = A^2 / n^(k-1)."""
        if self.A is None:
            return None
        return self.A * self.A / self.n ** (self.k - 1)

    @property
    def beta(self) -> AlgebraicNumber | None:
        """beta = B / (n^(k-1) chi(n))."""
        if self.B is None or self.chi_n is None:
            return None
        return self.B / (self.chi_n * self.n ** (self.k - 1))

    def to_dict(self) -> dict:
        s = lambda z: None if z is None else str(z)  # noqa: E731
        return {
            "n": self.n,
            "k": self.k,
            "N": self.level,
            "chi_n": s(self.chi_n),
            "A": s(self.A),
            "B": s(self.B),
            "alpha_sq": s(self.alpha_sq),
            "beta": s(self.beta),
            "S": s(self.S),
            "radicand": s(self.radicand),
            "sqrt_radicand": s(self.sqrt_radicand),
            "candidates": [s(t) for t in self.candidates],
            "denominators": list(self.denominators),
            "gcds": list(self.gcds),
            "outcome": None if self.outcome is None else self.outcome.value,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


@dataclass
class FactorOutcome:
    kind: Outcome
    trace: ReductionTrace
    factor: int | None = None
    reason: str = ""
    odd_weight_caveat: bool = False

    def __post_init__(self):
        if self.kind is Outcome.FACTOR:
            n = self.trace.n
            if not (self.factor and 1 < self.factor < n and n % self.factor == 0):
                raise InvariantViolation("factor soundness", f"{self.factor} does not split {n}")

    @property
    def ok(self) -> bool:
        return self.kind is Outcome.FACTOR

    def describe(self) -> str:
        if self.factor is not None:
            return f"factor: {self.factor}"
        return f"{self.kind.value}" + (f": {self.reason}" if self.reason else "")


def _finish(trace, kind, **kw) -> FactorOutcome:
    trace.outcome = kind
    return FactorOutcome(kind, trace, odd_weight_caveat=trace.k % 2 == 1, **kw)


def factor_semiprime(n: int, spec: EigenformSpec, oracle: CoefficientOracle) -> FactorOutcome:
    """Try to split n using a(n) and a(n^2) from the oracle.

    The returned outcome always carries the full trace. A ``FACTOR`` outcome is
    checked to divide n regardless of whether the oracle is a genuine
    eigenform, so a bad oracle can only cause failure, never a wrong answer.
    """
    k, N = spec.weight, spec.level
    trace = ReductionTrace(n=n, k=k, level=N)
    if n < 3:
        return _finish(trace, Outcome.UNSUPPORTED_INPUT, reason=f"n = {n} is below 3")
    g = math.gcd(n, N)
    if 1 < g < n:
        # a level gcd is a legitimate split; it is reported as such, not as a Factor
        trace.gcds = [g]
        trace.outcome = Outcome.TRIVIAL_GCD_WITH_LEVEL
        return FactorOutcome(Outcome.TRIVIAL_GCD_WITH_LEVEL, trace, factor=g,
                             odd_weight_caveat=k % 2 == 1)
    if g == n:
        return _finish(trace, Outcome.UNSUPPORTED_INPUT, reason=f"n = {n} divides the level {N}")
    if n % 2 == 0:
        return _finish(trace, Outcome.UNSUPPORTED_INPUT, reason="n must be odd")

    chi_n = spec.character(n)
    trace.chi_n = chi_n
    try:
        a_n = oracle.coeff(n)
        B = oracle.coeff(n * n)
    except EigenfactorError as exc:
        return _finish(trace, Outcome.UNSUPPORTED_INPUT, reason=str(exc))
    A = a_n / chi_n
    trace.A, trace.B = A, B
    scale = chi_n * n ** (k - 1)

    if not A:
        # one of a(p), a(q) vanishes: B = n^(k-1) chi(n) (1 - y^2)
        y_sq = (scale - B) / scale
        if not y_sq:
            return _finish(trace, Outcome.BOTH_COEFFICIENTS_VANISH)
        trace.candidates = [y_sq]
    else:
        S = A * A * chi_n - B + scale
        radicand = S * S - 4 * A * A * scale * chi_n
        trace.S, trace.radicand = S, radicand
        w = sqrt_in_field(radicand)
        trace.sqrt_radicand = w
        if w is None:
            return _finish(trace, Outcome.NO_SQUARE_ROOT_IN_FIELD)
        t_plus = (S + w) / (2 * scale)
        t_minus = S / scale - t_plus
        trace.candidates = [t_plus, t_minus]

    for t in trace.candidates:
        d = t.denominator()
        g = math.gcd(d, n)
        trace.denominators.append(d)
        trace.gcds.append(g)
    for g in trace.gcds:
        if 1 < g < n:
            return _finish(trace, Outcome.FACTOR, factor=g)
    return _finish(trace, Outcome.NO_USABLE_DENOMINATOR)


def check_trace(trace: ReductionTrace) -> list[str]:
    """Names of the exact trace invariants that fail (empty when all hold)."""
    bad = []
    if len(trace.candidates) != 2 or trace.S is None:
        return bad
    t1, t2 = trace.candidates
    scale = trace.chi_n * trace.n ** (trace.k - 1)
    if t1 * t2 != trace.A * trace.A / trace.n ** (trace.k - 1):
        bad.append("vieta-product")
    if t1 + t2 != trace.S / scale:
        bad.append("vieta-sum")
    if scale * (t1 - 1) * (t2 - 1) != trace.B:
        bad.append("coefficient-of-n-squared")
    return bad


# ---------------------------------------------------------------------------
# empirical scans

@dataclass
class VanishingScan:
    bound: int
    primes: list

    @property
    def count(self) -> int:
        return len(self.primes)


def scan_vanishing(spec: EigenformSpec, oracle: CoefficientOracle, X: int) -> VanishingScan:
    """Primes p <= X with a(p) = 0."""
    return VanishingScan(X, [p for p in primes_upto(X) if not oracle.coeff(p)])


def scan_nonordinary(spec: EigenformSpec, oracle: CoefficientOracle, X: int) -> list[int]:
    """Primes p <= X with p | a(p); needs rational coefficients."""
    if spec.field.degree != 1:
        raise ValueError("non-ordinary scan needs a degree-1 coefficient field")
    out = []
    for p in primes_upto(X):
        a = oracle.coeff(p).as_fraction()
        if a.denominator == 1 and a.numerator % p == 0:
            out.append(p)
    return out


@dataclass
class Trial:
    p: int
    q: int
    outcome: FactorOutcome
    invariant_failures: list


@dataclass
class FuzzReport:
    seed: int
    requested: int
    trials: list = dc_field(default_factory=list)
    note: str = ""

    @property
    def successes(self) -> int:
        return sum(1 for t in self.trials if t.outcome.ok and t.outcome.factor in (t.p, t.q))

    @property
    def counts(self) -> Counter:
        return Counter(t.outcome.kind.value for t in self.trials)

    @property
    def invariant_failures(self) -> list:
        return [t for t in self.trials if t.invariant_failures]

    def summary(self) -> str:
        lines = [f"trials: {len(self.trials)} (requested {self.requested}, seed {self.seed})",
                 f"successes: {self.successes}"]
        lines += [f"  {k}: {v}" for k, v in sorted(self.counts.items())]
        lines.append(f"invariant failures: {len(self.invariant_failures)}")
        if self.note:
            lines.append(self.note)
        return "\n".join(lines)


def _expected_square(spec: EigenformSpec, oracle: CoefficientOracle, p: int) -> AlgebraicNumber:
    # x^2 for the prime p
    return oracle.coeff(p) ** 2 / (spec.character(p) ** 2 * p ** (spec.weight - 1))


def reduction_fuzz(spec: EigenformSpec, oracle: CoefficientOracle, prime_pool: Sequence[int],
                   trials: int, seed: int = 0) -> FuzzReport:
    """Run the reduction on random products of two distinct pool primes.

    Pairs are drawn with ``random.Random(seed)``, so a report is reproducible.
    Besides the outcome, each trial records which exact invariants failed:
    the Vieta relations, the n^2 reconstruction, the candidate identification
    with x^2 and y^2, and that no gcd is composite.
    """
    pool = sorted(set(prime_pool))
    report = FuzzReport(seed, trials)
    if len(pool) < 2:
        report.note = "prime pool has fewer than two primes; no trials possible"
        return report
    rng = random.Random(seed)
    for _ in range(trials):
        p, q = sorted(rng.sample(pool, 2))
        out = factor_semiprime(p * q, spec, oracle)
        fails = check_trace(out.trace)
        tr = out.trace
        if len(tr.candidates) == 2:
            want = {_expected_square(spec, oracle, p), _expected_square(spec, oracle, q)}
            if set(tr.candidates) != want:
                fails.append("candidates-are-squares")
        if any(g not in (1, p, q) for g in tr.gcds):
            fails.append("gcd-prime-support")
        report.trials.append(Trial(p, q, out, fails))
    return report
