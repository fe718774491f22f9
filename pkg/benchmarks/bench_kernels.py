#!/usr/bin/env python3
"""Benchmark the circle-evaluation kernel: jitted loop vs numpy fallback.

The boundary-distance oracle evaluates a long truncated power series on a
circle grid; this script times that workload (the package's one hot loop)
on both backends and checks they agree.  The jitted path is what runs by
default; BOHR_PURE_NUMPY=1 selects the fallback at runtime.
"""

import argparse
import time

import numpy as np

from harmbohr._kernels import HAS_NUMBA, _abs_on_circle_numpy, abs_on_circle
from harmbohr.classes import extremal_coefficients, ph_alpha


def best_of(fn, repeats):
    """Smallest wall time over ``repeats`` calls (first call excluded)."""
    fn()  # warm-up: JIT compilation, cache effects
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=100_000, help="series truncation")
    parser.add_argument("--grid", type=int, default=720, help="circle grid points")
    parser.add_argument("--rho", type=float, default=0.999, help="circle radius")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    coeffs = extremal_coefficients(ph_alpha(0.3), args.n).analytic
    thetas = np.linspace(0.0, 2.0 * np.pi, args.grid, endpoint=False)

    print("=" * 68)
    print("CIRCLE-EVALUATION KERNEL BENCHMARK")
    print("=" * 68)
    print(f"series terms: {args.n}   grid: {args.grid}   rho: {args.rho}")
    print(f"jit backend available: {HAS_NUMBA}")
    print()

    t_numpy = best_of(lambda: _abs_on_circle_numpy(coeffs, args.rho, thetas), args.repeats)
    print(f"numpy fallback : {t_numpy * 1000:9.2f} ms per call")

    if HAS_NUMBA:
        from harmbohr._kernels import _abs_on_circle_numba

        t_jit = best_of(lambda: _abs_on_circle_numba(coeffs, args.rho, thetas), args.repeats)
        print(f"jitted kernel  : {t_jit * 1000:9.2f} ms per call")
        print(f"speedup        : {t_numpy / t_jit:9.2f}x")

        a = _abs_on_circle_numba(coeffs, args.rho, thetas)
        b = _abs_on_circle_numpy(coeffs, args.rho, thetas)
        worst = float(np.max(np.abs(a - b)))
        print(f"max |jit - numpy| over the grid: {worst:.3e}")
        if worst > 1e-10:
            print("AGREEMENT CHECK FAILED")
            return 1
        print("agreement check: OK")
    else:
        print("jitted kernel unavailable; dispatcher uses the numpy path")

    dispatched = abs_on_circle(coeffs, args.rho, thetas)
    print(f"dispatcher minimum over the grid: {float(dispatched.min()):.12f}")
    print("=" * 68)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
