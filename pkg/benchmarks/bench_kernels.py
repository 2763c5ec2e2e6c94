"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 5]

Also times one end-to-end stability map and one benchmark solve in a
subprocess with PHASEFIT_DISABLE_NUMBA unset and set.
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from phasefit import kernels
from phasefit.coeffs import coefficients
from phasefit.stability import _A_rows


def recurrence_inputs(n_steps=20000, h=15 / 3840):
    a = np.asarray(coefficients("classical").a, dtype=float)
    btab = np.asarray([coefficients("pf-d3", 0.4).b, coefficients("pf-d3", 0.5).b])
    bidx = (np.arange(n_steps) > n_steps // 2).astype(np.int64)
    g = -300.0 + np.cos(np.linspace(0, 15, n_steps + 12))
    y = np.zeros(n_steps + 12)
    y[:12] = np.sin(17.0 * h * np.arange(12))
    return y, a, btab, bidx, g, h * h


def root_inputs(n=20000):
    s = np.linspace(1e-3, 1.5, n)
    return _A_rows(coefficients("pf-d4", 0.7).b, s)


def best(func, repeat):
    return min(timeit.repeat(func, number=1, repeat=repeat))


def bench_kernels(repeat):
    if kernels.linear_recurrence_numba is None:
        print("numba unavailable; nothing to compare")
        return
    y, *rest = recurrence_inputs()
    kernels.linear_recurrence_numba(y.copy(), *rest)  # compile
    t_np = best(lambda: kernels.linear_recurrence_numpy(y.copy(), *rest), repeat)
    t_nb = best(lambda: kernels.linear_recurrence_numba(y.copy(), *rest), repeat)
    print(f"linear recurrence, {len(rest[2])} steps: numpy {t_np * 1e3:8.2f} ms  numba {t_nb * 1e3:8.2f} ms  "
          f"x{t_np / t_nb:.1f}")

    A = root_inputs()
    kernels.max_root_modulus_numba(A[:4])
    t_np = best(lambda: kernels.max_root_modulus_numpy(A), repeat)
    t_nb = best(lambda: kernels.max_root_modulus_numba(A), repeat)
    print(f"max root modulus, {len(A)} cells:    numpy {t_np * 1e3:8.2f} ms  numba {t_nb * 1e3:8.2f} ms  "
          f"x{t_np / t_nb:.1f}")


END_TO_END = """
import time
from phasefit import kernels
from phasefit.stability import stability_grid
from phasefit.schrodinger import run_benchmark
stability_grid('pf-d4', ns=20, nv=20); run_benchmark('pf-d2', 341.495874, 15 / 480)
t = time.perf_counter(); stability_grid('pf-d4', ns=300, nv=300); a = time.perf_counter() - t
t = time.perf_counter(); run_benchmark('pf-d2', 341.495874, 15 / 7680); b = time.perf_counter() - t
print(f'{kernels.BACKEND:6s} stability map 300x300 {a:6.2f} s   solve h=15/7680 {b:6.3f} s')
"""


def bench_end_to_end():
    for flag in ("", "1"):
        env = dict(os.environ, PHASEFIT_DISABLE_NUMBA=flag)
        subprocess.run([sys.executable, "-c", END_TO_END], env=env, check=True)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    bench_kernels(args.repeat)
    bench_end_to_end()


if __name__ == "__main__":
    main()
