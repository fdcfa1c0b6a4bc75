"""Count primes with tau(p) = 0 and non-ordinary primes for Delta up to a bound.

    python scripts/scan_delta.py --bound 100000
"""
import argparse
import time

from eigenfactor.forms import QExpansionOracle, delta_spec
from eigenfactor.reduction import scan_nonordinary, scan_vanishing


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=10**5)
    args = ap.parse_args()
    t0 = time.perf_counter()
    oracle = QExpansionOracle(args.bound + 1)
    t1 = time.perf_counter()
    spec = delta_spec(2)
    zeros = scan_vanishing(spec, oracle, args.bound)
    nonord = scan_nonordinary(spec, oracle, args.bound)
    print(f"q-expansion to {args.bound}: {t1 - t0:.2f}s")
    print(f"primes p <= {args.bound} with tau(p) = 0: {zeros.count}")
    print(f"non-ordinary primes p <= {args.bound}: {nonord}")


if __name__ == "__main__":
    main()
