"""Benchmark the numba kernels against the pure-NumPy fallback path.

The double-double kernels exist in two bitwise-equivalent implementations:
explicit loops (numba-compiled by default) and row/block-vectorized NumPy.
This script times both in-process, then times the eigensolver end-to-end in
subprocesses with CONFED_NUMBA=1 and CONFED_NUMBA=0 to show the package-wide
effect of the env flag.

Usage: python benchmarks/bench_kernels.py [--full]
  --full also times the n <= 128 audit (slow on the NumPy path).
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from confed import _dd_kernels as K
from confed._backend import NUMBA_ENABLED


def _best_time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        copies = [np.copy(a) for a in args]
        t0 = time.perf_counter()
        fn(*copies)
        best = min(best, time.perf_counter() - t0)
    return best


def _bench_pair(name, loops_fn, numpy_fn, args, repeat=5):
    _best_time(loops_fn, args, 1)  # compilation warmup
    t_loops = _best_time(loops_fn, args, repeat)
    t_numpy = _best_time(numpy_fn, args, max(1, repeat // 2))
    print(f"{name:<28} {t_loops * 1e3:>10.3f} ms {t_numpy * 1e3:>12.3f} ms "
          f"{t_numpy / t_loops:>8.1f}x")


def _subprocess_time(env_value, code):
    env = dict(os.environ, CONFED_NUMBA=env_value)
    t0 = time.perf_counter()
    subprocess.run([sys.executable, "-c", code], env=env, check=True,
                   stdout=subprocess.DEVNULL)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--full", action="store_true",
                    help="include the slow NumPy-path audit timing")
    opts = ap.parse_args()

    backend = "numba" if NUMBA_ENABLED else "NumPy fallback (set CONFED_NUMBA=1?)"
    print(f"active backend for the loop kernels: {backend}")
    print(f"{'kernel':<28} {'loops':>13} {'numpy':>15} {'speedup':>8}")

    rng = np.random.default_rng(0)
    for n in (8, 32, 64, 128):
        a = rng.standard_normal((n, n))
        z = np.zeros((n, n))
        _bench_pair(f"dd LU determinant n={n}", K._det_dd_loops, K._det_dd_numpy,
                    (a, z))
    for n in (8, 32, 64):
        a = rng.standard_normal((n, n))
        b = rng.standard_normal((n, n))
        z = np.zeros((n, n))
        _bench_pair(f"complex dd determinant n={n}", K._det_zdd_loops,
                    K._det_zdd_numpy, (a, z, b, z))
    for n in (16, 64, 128):
        a = rng.standard_normal((n, n))
        z = np.zeros((n, n))
        _bench_pair(f"dd Gauss-Jordan inverse n={n}", K._inv_dd_loops,
                    K._inv_dd_numpy, (a, z))
    for n in (16, 64):
        a = rng.standard_normal((n, n))
        z = np.zeros((n, n))
        v = rng.standard_normal(n)
        _bench_pair(f"dd column-pivot solve n={n}", K._solve_colpiv_loops,
                    K._solve_colpiv_numpy, (a, z, v, np.zeros(n)))

    print("\nend-to-end via CONFED_NUMBA (fresh interpreter, includes import):")
    hqr_code = (
        "import numpy as np\n"
        "from confed import hessenberg_qr\n"
        "rng = np.random.default_rng(1)\n"
        "for _ in range(3):\n"
        "    hessenberg_qr(rng.standard_normal((64, 64)))\n"
    )
    t1 = _subprocess_time("1", hqr_code)
    t0 = _subprocess_time("0", hqr_code)
    print(f"  3x hessenberg_qr(64): numba {t1:.2f}s vs numpy-path {t0:.2f}s")

    fig_code = (
        "from confed.harness import Config, run_figure1\n"
        "import tempfile\n"
        "run_figure1(Config(trials=50, out_dir=tempfile.mkdtemp()))\n"
    )
    t1 = _subprocess_time("1", fig_code)
    t0 = _subprocess_time("0", fig_code)
    print(f"  figure1, 150 trials:  numba {t1:.2f}s vs numpy-path {t0:.2f}s")

    if opts.full:
        audit_code = (
            "from confed.harness import run_audit\n"
            "run_audit('chebyshev', 4, 128)\n"
        )
        t1 = _subprocess_time("1", audit_code)
        t0 = _subprocess_time("0", audit_code)
        print(f"  audit n<=128:         numba {t1:.2f}s vs numpy-path {t0:.2f}s")


if __name__ == "__main__":
    main()
