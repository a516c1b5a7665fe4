"""Benchmark the numba kernels against the pure-numpy fallback.

Kernel timings call both implementations directly in one process. The
end-to-end timing runs the default theorem grid in a subprocess per
backend, selected through ``KBINT_DISABLE_NUMBA``.

    python benchmarks/bench_kernels.py [--repeat N] [--skip-grid]
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np

from kbint import _kernels
from kbint._accel import HAVE_NUMBA


def best_time(fn, repeat, warmup=2):
    for _ in range(warmup):
        fn()
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def w_cases():
    rng = np.random.default_rng(0)
    for n in (1_000, 100_000):
        yield f"w_series  n={n:<7d} |q|<=25", 0.5, rng.uniform(-25.0, 25.0, n)


def wright_cases():
    lam, nu, rho = 0.8, 0.5, 0.5
    spec = ([lam + nu], [2.0], [nu + 1, 2 * lam + nu + rho], [1.0, 2.0])
    for z in (-0.5, -20.0, 200.0):
        yield f"wright    z={z:<8g}", spec, z


def kernel_rows(repeat):
    rows = []
    for label, nu, q in w_cases():
        args = (nu, q, 1e-15, 10_000)
        t_np = best_time(lambda: _kernels.w_series_numpy(*args), repeat)
        t_nb = best_time(lambda: _kernels.w_series_numba(*args), repeat) if HAVE_NUMBA else float("nan")
        rows.append((label, t_np, t_nb))
    for label, (a, A, b, B), z in wright_cases():
        arrs = [np.asarray(v, dtype=np.float64) for v in (a, A, b, B)]
        args = (*arrs, z, 1e-15, 10_000)
        t_np = best_time(lambda: _kernels.wright_series_numpy(*args), repeat)
        t_nb = best_time(lambda: _kernels.wright_series_numba(*args), repeat) if HAVE_NUMBA else float("nan")
        rows.append((label, t_np, t_nb))
    return rows


_GRID_SNIPPET = """
import time
from kbint.identities import DEFAULT_GRID, verify_grid
verify_grid('theorem1', [next(iter(DEFAULT_GRID.cases()))])
start = time.perf_counter()
verify_grid('{kind}', DEFAULT_GRID)
print(time.perf_counter() - start)
"""


def grid_seconds(kind, disable_numba):
    env = dict(os.environ)
    env.pop("KBINT_DISABLE_NUMBA", None)
    if disable_numba:
        env["KBINT_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", _GRID_SNIPPET.format(kind=kind)], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=20)
    parser.add_argument("--skip-grid", action="store_true", help="skip the end-to-end grid timing")
    args = parser.parse_args(argv)

    if not HAVE_NUMBA:
        print("numba is not installed; only the numpy column is meaningful")
    print(f"{'kernel':<32}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}")
    for label, t_np, t_nb in kernel_rows(args.repeat):
        print(f"{label:<32}{1e3 * t_np:>12.3f}{1e3 * t_nb:>12.3f}{t_np / t_nb:>9.1f}x")

    if not args.skip_grid:
        print(f"\n{'default grid (648 tuples)':<32}{'numpy [s]':>12}{'numba [s]':>12}{'speedup':>10}")
        for kind in ("theorem1", "theorem2"):
            t_np = grid_seconds(kind, True)
            t_nb = grid_seconds(kind, False) if HAVE_NUMBA else float("nan")
            print(f"{kind:<32}{t_np:>12.3f}{t_nb:>12.3f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
