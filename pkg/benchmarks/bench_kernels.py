#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times the three hot loops of the Monte Carlo verifier on random point
clouds and prints one table row per (kernel, size).  Run after building
the extension in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_kernels.py
"""

import argparse
import time

import numpy as np

from cellbounds import _core_py

try:
    from cellbounds import _core
except ImportError:
    _core = None


def make_cloud(n, seed):
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0, 120, size=(n, 2))
    x = np.ascontiguousarray(pts[:, 0])
    y = np.ascontiguousarray(pts[:, 1])
    ages = rng.random(n)
    marks = rng.integers(1, 4, size=n).astype(np.int64)
    return x, y, ages, marks


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench(impl, name, x, y, ages, marks, repeat):
    n = x.shape[0]
    out = np.zeros(n, dtype=np.uint8)
    cases = {
        "matern_keep_mask": lambda: impl.matern_keep_mask(x, y, ages, 4.0, out),
        "min_same_mark_sq_dist": lambda: impl.min_same_mark_sq_dist(x, y, marks),
        "bounded_power_law_sum": lambda: impl.bounded_power_law_sum(
            x, y, 60.0, 60.0, 4.0, -1),
    }
    return {case: timeit(fn, repeat) for case, fn in cases.items()}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[500, 2000, 5000])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _core is None:
        print("compiled kernels unavailable; timing the fallback only")

    header = f"{'kernel':<24}{'n':>7}{'python':>12}{'compiled':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        x, y, ages, marks = make_cloud(n, args.seed)
        py = bench(_core_py, "python", x, y, ages, marks, args.repeat)
        cy = (bench(_core, "compiled", x, y, ages, marks, args.repeat)
              if _core is not None else None)
        for case, t_py in py.items():
            if cy is None:
                print(f"{case:<24}{n:>7}{t_py * 1e3:>10.3f}ms{'-':>12}{'-':>10}")
            else:
                t_cy = cy[case]
                print(f"{case:<24}{n:>7}{t_py * 1e3:>10.3f}ms"
                      f"{t_cy * 1e3:>10.3f}ms{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
