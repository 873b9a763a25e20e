#!/usr/bin/env python3
"""Benchmark the compiled cylinder kernel against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--depth N]
"""

import argparse
import time

from dbhole import kernels

CASES = [
    ("golden-ish hole", 0, 1, 1, 4),
    ("first-order hole", 1, 3, 2, 3),
    ("thin middle hole", 21, 50, 29, 50),
    ("asymmetric hole", 17, 50, 33, 50),
]


def time_call(fn, *args, repeats=3):
    best = float("inf")
    value = None
    for _ in range(repeats):
        start = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - start)
    return value, best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--depth", type=int, default=14)
    args = parser.parse_args()
    depth = args.depth

    print(f"backend selected at import: {kernels.BACKEND}")
    print(f"cylinder generation depth: {depth}  ({2 ** depth} cylinders)\n")
    header = f"{'case':<18} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, pa, qa, pb, qb in CASES:
        pure_val, pure_t = time_call(kernels.cylinder_counts_pure, depth, pa, qa, pb, qb)
        if kernels.BACKEND == "compiled":
            comp_val, comp_t = time_call(kernels._cylinder_counts_compiled,
                                         depth, pa, qa, pb, qb)
            assert comp_val == pure_val, (name, comp_val, pure_val)
            print(f"{name:<18} {pure_t:>10.4f} {comp_t:>13.4f} {pure_t / comp_t:>7.1f}x")
        else:
            print(f"{name:<18} {pure_t:>10.4f} {'n/a':>13} {'n/a':>8}")
    if kernels.BACKEND != "compiled":
        print("\ncompiled kernel not built; run `python setup.py build_ext --inplace`")


if __name__ == "__main__":
    main()
