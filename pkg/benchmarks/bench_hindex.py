#!/usr/bin/env python3
"""Compare the compiled h-index kernel against the pure-Python fallback.

Run: python3 benchmarks/bench_hindex.py [--sizes 10,100,1000] [--repeats 5]
"""

import argparse
import random
import time

from tcln.indices import _h_index_py

try:
    from tcln._hindex_fast import h_index as h_index_fast
except ImportError:
    h_index_fast = None


def bench(fn, vectors, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for v in vectors:
            fn(v)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="10,100,1000",
                        help="comma-separated vector lengths")
    parser.add_argument("--count", type=int, default=2000,
                        help="vectors per size (default: 2000)")
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print(f"{'size':>6} {'python':>12} {'cython':>12} {'speedup':>8}")
    for size in (int(s) for s in args.sizes.split(",")):
        vectors = [[rng.randint(0, 500) for _ in range(size)]
                   for _ in range(args.count)]
        t_py = bench(_h_index_py, vectors, args.repeats)
        if h_index_fast is None:
            print(f"{size:>6} {t_py:>11.4f}s {'n/a':>12} {'n/a':>8}")
            continue
        for v in vectors[:50]:
            assert h_index_fast(v) == _h_index_py(v)
        t_cy = bench(h_index_fast, vectors, args.repeats)
        print(f"{size:>6} {t_py:>11.4f}s {t_cy:>11.4f}s {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
