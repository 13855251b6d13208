#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the numpy fallback.

Times full-span weight histograms (the hot loop behind minimum-distance
and evenness checks) on a grid of field orders and code shapes.

    python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import time

import numpy as np

from qcsst import _kernels, fqlinear, make_field

GRID = [
    # (p, e, n, k)
    (2, 1, 48, 16),
    (2, 1, 48, 20),
    (2, 1, 60, 24),
    (2, 2, 16, 8),
    (3, 1, 20, 10),
    (5, 1, 12, 8),
    (2, 4, 12, 5),
]

QUICK_GRID = [(2, 1, 48, 14), (2, 2, 14, 6), (3, 1, 16, 8)]


def time_backend(field, rows, backend, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = _kernels.weight_histogram(rows, field.q, field.add_table,
                                           field.mul_table, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true",
                        help="smaller grid, one repeat")
    args = parser.parse_args()
    grid = QUICK_GRID if args.quick else GRID
    repeats = 1 if args.quick else 3

    have_cython = _kernels.BACKEND == "cython"
    print(f"selected backend: {_kernels.BACKEND}")
    if not have_cython:
        print("compiled kernels unavailable; timing the fallback only\n")

    header = f"{'field':>8} {'n':>4} {'k':>4} {'words':>10} " \
             f"{'python':>10} {'cython':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for p, e, n, k in grid:
        field = make_field(p, e)
        rng = np.random.default_rng(hash((p, e, n, k)) % 2**32)
        code = fqlinear.sample_code(field, n, k, rng)
        words = field.q**k
        t_py, h_py = time_backend(field, code.generator, "python", repeats)
        if have_cython:
            t_cy, h_cy = time_backend(field, code.generator, "cython", repeats)
            assert h_py.tolist() == h_cy.tolist(), "backend mismatch"
            print(f"{str(field):>8} {n:>4} {k:>4} {words:>10} "
                  f"{t_py:>9.4f}s {t_cy:>9.4f}s {t_py / t_cy:>7.1f}x")
        else:
            print(f"{str(field):>8} {n:>4} {k:>4} {words:>10} "
                  f"{t_py:>9.4f}s {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
