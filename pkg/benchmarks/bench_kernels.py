#!/usr/bin/env python3
"""Benchmark the compiled kernel extension against the NumPy fallback.

Run after installing the package (the extension builds during install):

    python3 benchmarks/bench_kernels.py [--n 10000000] [--repeat 3]

Each kernel is timed best-of-N on identical inputs; the final column is the
fallback time divided by the compiled time.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from diosieve.backend import available_backends


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=10**7)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled extension not available; showing the python lane only")
    n = args.n
    seg = 1 << 20

    # shared inputs, prepared once
    spf = backends["python"].sieve_spf(n, seg)
    flags = backends["python"].sieve_primality(n, seg)
    primes = np.nonzero(flags)[0].astype(np.int64)
    phase_input = np.arange(n - 10**6, n, dtype=np.int64)
    alpha = float(np.sqrt(2.0))

    cases = {
        f"sieve_primality({n:.0e})": lambda k: k.sieve_primality(n, seg),
        f"sieve_spf({n:.0e})": lambda k: k.sieve_spf(n, seg),
        f"omega_batch({primes.size} values)": lambda k: k.omega_batch(spf, primes + 2),
        "phase_frac(1e6 values)": lambda k: k.phase_frac(phase_input, alpha, 3, 0.9, 0.0),
        f"dio_classify({primes.size} primes)": lambda k: k.dio_classify(
            primes, alpha, 0.0, 0.9, 0.089, True, 1e-15, 1e-17
        ),
    }

    width = max(len(name) for name in cases)
    header = f"{'kernel':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, call in cases.items():
        times = {}
        for bname, mod in backends.items():
            times[bname] = best_of(lambda: call(mod), args.repeat)
        py = times["python"]
        if "compiled" in times:
            cx = times["compiled"]
            print(f"{name:<{width}}  {py:>9.3f}s  {cx:>9.3f}s  {py / cx:>7.1f}x")
        else:
            print(f"{name:<{width}}  {py:>9.3f}s  {'-':>10}  {'-':>8}")


if __name__ == "__main__":
    main()
