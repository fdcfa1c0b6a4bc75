"""Outcome statistics of the reduction on random semiprimes built from Delta.

tau(p) is tabulated from the q-expansion up to --prime-max, so the pool can be
much larger than the bundled p <= 97 table.

    python scripts/fuzz_outcomes.py --prime-max 1000 --trials 2000
"""
import argparse
import time

from eigenfactor.forms import RecurrenceOracle, delta_spec, primes_upto
from eigenfactor.reduction import reduction_fuzz


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--prime-max", type=int, default=1000)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    spec = delta_spec(args.prime_max)
    pool = [p for p in primes_upto(args.prime_max) if p > 2]
    t0 = time.perf_counter()
    rep = reduction_fuzz(spec, RecurrenceOracle(spec), pool, args.trials, args.seed)
    print(rep.summary())
    print(f"pool: {len(pool)} odd primes <= {args.prime_max}; {time.perf_counter() - t0:.2f}s")
    largest = max(rep.trials, key=lambda t: t.p * t.q, default=None)
    if largest:
        tr = largest.outcome.trace
        print(f"largest n = {tr.n}: denominators {tr.denominators}, gcds {tr.gcds}")


if __name__ == "__main__":
    main()
