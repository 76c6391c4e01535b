#!/usr/bin/env python3
"""Benchmark the compiled character kernel against the pure-Python twin.

Builds the full character table at each degree with both kernels,
checks they agree entry for entry, and reports wall times.

Usage: python benchmarks/bench_kernel.py [max_degree]
"""

import sys
import time

from wgmono import _mnkernel_py
from wgmono._mnkernel_py import shape_mask
from wgmono.partitions import lex_list

try:
    from wgmono import _mnkernel_c
except ImportError:
    _mnkernel_c = None


def build_with(kernel, masks, alphas):
    start = time.perf_counter()
    cols = kernel.compute_columns(masks, alphas)
    return time.perf_counter() - start, cols


def main():
    max_degree = int(sys.argv[1]) if len(sys.argv) > 1 else 20
    if _mnkernel_c is None:
        print("compiled kernel not built; run: python setup.py build_ext --inplace")
        return 1

    print(f"{'degree':>6} {'classes':>8} {'pure-python':>12} {'compiled':>10} {'speedup':>8}")
    for d in range(10, max_degree + 1, 2):
        order = lex_list(d)
        masks = [shape_mask(tuple(p)) for p in order]
        alphas = [tuple(p) for p in order]
        t_py, cols_py = build_with(_mnkernel_py, masks, alphas)
        t_c, cols_c = build_with(_mnkernel_c, masks, alphas)
        assert cols_py == cols_c, f"kernel disagreement at degree {d}"
        print(f"{d:>6} {len(order):>8} {t_py:>11.3f}s {t_c:>9.3f}s {t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
