"""Benchmark the numba kernels against the pure-numpy fallbacks.

Runs the theta lattice sum and the Aberth root iteration through both
implementations and prints the timing ratio.  The selection used by the
library itself is controlled by the G2SATAKE_NO_NUMBA environment
variable; this script always times both paths directly.

Usage:  python benchmarks/bench_kernels.py [--radius 12] [--repeat 200]
"""

import argparse
import time

import numpy as np

from g2satake import _kernels


def _time(fn, repeat):
    fn()  # warm up (JIT compilation for the numba path)
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t0) / repeat


def bench_theta(radius, repeat):
    tau1, z, tau2 = 0.3 + 1.1j, 0.2 + 0.4j, -0.4 + 1.7j
    args = (0.5, 0.0, 0.5, 0.5, tau1, z, tau2, radius)

    def run_jit():
        for _ in range(10):
            _kernels.theta_sum_jit(*args)

    def run_np():
        for _ in range(10):
            _kernels.theta_sum_numpy(*args)

    a = _kernels.theta_sum_jit(*args)
    b = _kernels.theta_sum_numpy(*args)
    assert abs(a - b) < 1e-12, "kernel paths disagree"
    t_jit = _time(run_jit, repeat)
    t_np = _time(run_np, repeat)
    label = "numba" if _kernels.USE_NUMBA else "loop (no numba)"
    print(f"theta sum  (radius {radius}, 10 characteristics):")
    print(f"  {label:>16}: {t_jit * 1e6:9.1f} us")
    print(f"  {'numpy':>16}: {t_np * 1e6:9.1f} us   ratio {t_np / t_jit:5.2f}x")


def bench_aberth(repeat):
    rng = np.random.default_rng(7)
    roots = rng.normal(size=6) + 1j * rng.normal(size=6)
    coeffs = np.poly(roots).astype(np.complex128)

    def run_jit():
        _kernels.aberth_jit(coeffs, 1e-14, 500)

    def run_np():
        _kernels.aberth_numpy(coeffs, 1e-14, 500)

    ra, _ = _kernels.aberth_jit(coeffs, 1e-14, 500)
    rb, _ = _kernels.aberth_numpy(coeffs, 1e-14, 500)
    assert abs(np.sort_complex(ra) - np.sort_complex(rb)).max() < 1e-9
    t_jit = _time(run_jit, repeat)
    t_np = _time(run_np, repeat)
    label = "numba" if _kernels.USE_NUMBA else "loop (no numba)"
    print("aberth roots (degree 6):")
    print(f"  {label:>16}: {t_jit * 1e6:9.1f} us")
    print(f"  {'numpy':>16}: {t_np * 1e6:9.1f} us   ratio {t_np / t_jit:5.2f}x")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radius", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()
    print(f"numba available: {_kernels.HAVE_NUMBA}; "
          f"jit path in use: {_kernels.USE_NUMBA}")
    bench_theta(args.radius, args.repeat)
    bench_aberth(args.repeat)


if __name__ == "__main__":
    main()
