import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eigenfactor.errors import OutOfRange
from eigenfactor.forms import DirichletCharacter, EigenformSpec, QExpansionOracle, RecurrenceOracle, primes_upto
from eigenfactor.numberfield import RATIONALS
from eigenfactor.reduction import (
    Outcome,
    check_trace,
    factor_semiprime,
    reduction_fuzz,
    scan_nonordinary,
    scan_vanishing,
)

Q = RATIONALS


class FixedOracle:
    """Returns whatever values it is given; no eigenform behind it."""

    field = Q

    def __init__(self, values):
        self.values = values

    def coeff(self, n):
        if n not in self.values:
            raise OutOfRange(f"no value for {n}")
        return Q(self.values[n])

    def supports(self, n):
        return n in self.values


def level_one(weight, primes):
    return EigenformSpec("synthetic", weight, 1, DirichletCharacter.trivial(1), Q,
                         {p: Q(v) for p, v in primes.items()})


def trial_division(n):
    return [d for d in range(2, n) if n % d == 0 and all(d % e for e in range(2, d))]


# the two worked examples -----------------------------------------------------

def test_example_1(delta):
    out = factor_semiprime(15, delta, QExpansionOracle(226))
    tr = out.trace
    assert tr.A == 1217160 and tr.B == 2897808426675
    assert tr.alpha_sq == Fraction(81288256, 474609375)
    assert tr.beta == Fraction(1431016507, 4271484375)
    assert tr.candidates[0] == Fraction(933156, 1953125)
    assert tr.denominators[0] == 1953125 and tr.gcds[0] == 5
    assert (out.kind, out.factor) == (Outcome.FACTOR, 5)
    assert check_trace(tr) == []


def test_example_2(g29, g29_rec):
    K = g29.field
    g = K.gen
    out = factor_semiprime(15, g29, g29_rec)
    assert set(out.trace.candidates) == {(30 * g + 73) / 27, (-40 * g + 17) / 125}
    assert sorted(out.trace.denominators) == [729, 15625]
    assert out.factor in (3, 5)
    assert check_trace(out.trace) == []


def test_n21_delta(delta_rec, delta):
    out = factor_semiprime(21, delta, delta_rec)
    assert out.ok and out.factor in trial_division(21)


def test_level_gcd_shortcut(g29, g29_rec):
    out = factor_semiprime(58, g29, g29_rec)
    assert out.kind is Outcome.TRIVIAL_GCD_WITH_LEVEL and out.factor == 29
    assert factor_semiprime(29, g29, g29_rec).kind is Outcome.UNSUPPORTED_INPUT


@pytest.mark.parametrize("n", [1, 2, 22])
def test_unsupported_inputs(n, delta, delta_rec):
    assert factor_semiprime(n, delta, delta_rec).kind is Outcome.UNSUPPORTED_INPUT


def test_oracle_errors_become_unsupported(delta):
    out = factor_semiprime(15, delta, QExpansionOracle(100))
    assert out.kind is Outcome.UNSUPPORTED_INPUT and "range" in out.reason


# failure branches -----------------------------------------------------------

def test_one_coefficient_vanishes():
    tau5 = 4830
    spec = level_one(12, {3: 0, 5: tau5})
    out = factor_semiprime(15, spec, RecurrenceOracle(spec))
    assert out.trace.A == 0
    assert out.trace.candidates == [Q(Fraction(tau5**2, 5**11))]
    assert out.factor == 5


def test_both_coefficients_vanish():
    spec = level_one(12, {3: 0, 5: 0})
    assert factor_semiprime(15, spec, RecurrenceOracle(spec)).kind is Outcome.BOTH_COEFFICIENTS_VANISH


def test_no_square_root():
    out = factor_semiprime(15, level_one(12, {}), FixedOracle({15: 1, 225: 1}))
    assert out.kind is Outcome.NO_SQUARE_ROOT_IN_FIELD
    assert out.trace.sqrt_radicand is None


def test_no_usable_denominator_and_odd_weight():
    # weight 3, x^2 = 1 and y^2 = 4: integral candidates carry no information
    out = factor_semiprime(15, level_one(3, {}), FixedOracle({15: 30, 225: 0}))
    assert out.kind is Outcome.NO_USABLE_DENOMINATOR
    assert set(out.trace.candidates) == {Q(1), Q(4)}
    assert out.odd_weight_caveat


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([15, 21, 35, 77, 91, 143, 221, 105, 225]),
       st.integers(-10**15, 10**15), st.integers(-10**30, 10**30), st.sampled_from([2, 3, 4, 12]))
def test_soundness_with_arbitrary_oracle(n, an, an2, k):
    out = factor_semiprime(n, level_one(k, {}), FixedOracle({n: an, n * n: an2}))
    if out.factor is not None:
        assert 1 < out.factor < n and n % out.factor == 0
    assert check_trace(out.trace) == []


def test_trace_json(delta, delta_rec):
    doc = json.loads(factor_semiprime(35, delta, delta_rec).trace.to_json())
    for key in ("n", "k", "N", "chi_n", "A", "B", "alpha_sq", "beta", "S", "radicand",
                "sqrt_radicand", "candidates", "denominators", "gcds", "outcome"):
        assert key in doc
    assert doc["outcome"] == "Factor"


# scans ----------------------------------------------------------------------

def test_scan_vanishing(delta, naive_tau):
    assert scan_vanishing(delta, QExpansionOracle(11), 10).count == 0
    assert all(naive_tau[p] for p in primes_upto(10))
    spec = level_one(12, {2: 1, 3: 0, 5: 1, 7: 1})
    scan = scan_vanishing(spec, RecurrenceOracle(spec), 10)
    assert (scan.count, scan.primes) == (1, [3])


def test_scan_nonordinary(delta, delta_rec, naive_tau, g29, g29_rec):
    brute = [p for p in primes_upto(100) if naive_tau[p] % p == 0]
    assert scan_nonordinary(delta, delta_rec, 100) == brute == [2, 3, 5, 7]
    assert scan_nonordinary(delta, delta_rec, 2) == [2]
    ones = level_one(12, {p: 1 for p in primes_upto(100)})
    assert scan_nonordinary(ones, RecurrenceOracle(ones), 100) == []
    with pytest.raises(ValueError):
        scan_nonordinary(g29, g29_rec, 5)


# fuzzing --------------------------------------------------------------------

def test_fuzz_delta_small(delta, delta_rec):
    pool = [p for p in primes_upto(97) if p > 2]
    rep = reduction_fuzz(delta, delta_rec, pool, 40, seed=7)
    assert rep.successes == 40 and not rep.invariant_failures
    again = reduction_fuzz(delta, delta_rec, pool, 40, seed=7)
    assert [(t.p, t.q) for t in rep.trials] == [(t.p, t.q) for t in again.trials]


def test_fuzz_degenerate_pool(delta, delta_rec):
    rep = reduction_fuzz(delta, delta_rec, [3], 10)
    assert rep.trials == [] and "fewer than two" in rep.note


def test_fuzz_g29(g29, g29_rec):
    rep = reduction_fuzz(g29, g29_rec, [3, 5], 1)
    assert rep.successes == 1 and rep.trials[0].p * rep.trials[0].q == 15
    assert not rep.invariant_failures
