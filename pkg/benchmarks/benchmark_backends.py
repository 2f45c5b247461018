#!/usr/bin/env python3
"""Timing comparison of the numba and numpy kernel backends.

Runs the two hot kernels -- the dual-atom expansion and the worst-case
amplification search -- on both backends across a range of problem
sizes, prints per-size timings and speedups, and cross-checks that the
backends produce matching numbers.
"""

import argparse
import time

import numpy as np

from dualmds import HAS_NUMBA, PointConfiguration, num_pairs, squared_distances
from dualmds._kernels import warm_up
from dualmds.mds import expand_coefficients
from dualmds.stability import amplification_factor


def best_of(repeats, fn):
    """Shortest wall-clock time of ``repeats`` calls."""
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def expansion_input(n, rng):
    P = PointConfiguration(rng.standard_normal((n, min(3, n - 1))))
    return squared_distances(P).upper_entries()


def bench_expansion(n, backend, repeats, coeffs):
    result = expand_coefficients(coeffs, n, backend=backend)
    return result, best_of(repeats, lambda: expand_coefficients(
        coeffs, n, backend=backend))


def bench_amplification(n, backend, repeats, _coeffs):
    result = amplification_factor(n, backend=backend)
    return result, best_of(repeats, lambda: amplification_factor(
        n, backend=backend))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+",
                        default=[10, 20, 40, 80, 160],
                        help="problem sizes (number of points)")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timed repetitions per measurement (best kept)")
    parser.add_argument("--seed", type=int, default=0, help="random seed")
    args = parser.parse_args()

    if not HAS_NUMBA:
        print("numba is not importable; timing the numpy backend only")
        backends = ["numpy"]
    else:
        print("compiling numba kernels (excluded from timings) ...")
        warm_up()
        backends = ["numba", "numpy"]

    rng = np.random.default_rng(args.seed)
    header = f"{'kernel':<14} {'n':>5} {'pairs':>7}"
    for backend in backends:
        header += f" {backend + ' [ms]':>12}"
    if len(backends) == 2:
        header += f" {'speedup':>8}"
    print()
    print(header)
    print("-" * len(header))

    for name, runner in (("expansion", bench_expansion),
                         ("amplification", bench_amplification)):
        for n in args.sizes:
            coeffs = expansion_input(n, rng) if name == "expansion" else None
            times = {}
            values = {}
            for backend in backends:
                values[backend], times[backend] = runner(
                    n, backend, args.repeats, coeffs)
            if len(backends) == 2:
                gap = np.max(np.abs(np.asarray(values["numba"])
                                    - np.asarray(values["numpy"])))
                if gap > 1e-9 * max(1.0, float(np.max(np.abs(values["numpy"])))):
                    raise SystemExit(
                        f"backend mismatch for {name} at n={n}: gap {gap:.3e}")
            line = f"{name:<14} {n:>5} {num_pairs(n):>7}"
            for backend in backends:
                line += f" {1e3 * times[backend]:>12.3f}"
            if len(backends) == 2:
                line += f" {times['numpy'] / times['numba']:>7.2f}x"
            print(line)
    print()
    print("speedup = numpy time / numba time; backends cross-checked on "
          "every measurement")


if __name__ == "__main__":
    main()
