"""Throughput comparison of the compiled and pure-Python playout kernels.

Usage: python3 benchmarks/kernel_benchmark.py [--n 200] [--trials 2000]
Both kernels play the exact same games (identical seeds), so the timing
difference is pure interpreter overhead.
"""

import argparse
import time

from zeckgame import _kernel_py

try:
    from zeckgame import _kernel_c
except ImportError:
    _kernel_c = None


def bench(kernel, n, trials, seed=1):
    start = time.perf_counter()
    lengths = kernel.random_playout_lengths(n, seed, 0, trials)
    elapsed = time.perf_counter() - start
    return elapsed, sum(lengths)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=200)
    parser.add_argument("--trials", type=int, default=2000)
    args = parser.parse_args()

    py_time, py_moves = bench(_kernel_py, args.n, args.trials)
    print(
        f"pure python: {args.trials} games on n={args.n} in {py_time:.3f}s "
        f"({py_moves / py_time / 1e6:.2f}M moves/s)"
    )
    if _kernel_c is None:
        print("compiled kernel not built; run pip install -e . --no-build-isolation")
        return
    c_time, c_moves = bench(_kernel_c, args.n, args.trials)
    assert c_moves == py_moves, "kernels disagree"
    print(
        f"cython:      {args.trials} games on n={args.n} in {c_time:.3f}s "
        f"({c_moves / c_time / 1e6:.2f}M moves/s)"
    )
    print(f"speedup: {py_time / c_time:.1f}x")


if __name__ == "__main__":
    main()
