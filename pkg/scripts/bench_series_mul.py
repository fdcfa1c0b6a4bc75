"""Time the three multiplication kernels on random dense series.

    python scripts/bench_series_mul.py --sizes 64 256 1024 4096 --bits 100
"""
import argparse
import random
import time

from eigenfactor.qseries import TruncatedSeries, series_mul

SLOW = {"schoolbook": 2048, "karatsuba": 16384}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 256, 1024, 4096, 16384])
    ap.add_argument("--bits", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"{'T':>7} {'schoolbook':>11} {'karatsuba':>11} {'kronecker':>11}")
    for T in args.sizes:
        a = TruncatedSeries(tuple(rng.getrandbits(args.bits) - (1 << (args.bits - 1)) for _ in range(T)))
        b = TruncatedSeries(tuple(rng.getrandbits(args.bits) - (1 << (args.bits - 1)) for _ in range(T)))
        row, ref = [], None
        for method in ("schoolbook", "karatsuba", "kronecker"):
            if T > SLOW.get(method, 1 << 62):
                row.append(f"{'-':>11}")
                continue
            t0 = time.perf_counter()
            c = series_mul(a, b, method)
            row.append(f"{time.perf_counter() - t0:>10.4f}s")
            assert ref is None or c == ref
            ref = c
        print(f"{T:>7} " + " ".join(row))


if __name__ == "__main__":
    main()
