#!/usr/bin/env python3
"""Time the numba kernels against their numpy twins.

Usage:
    python3 benchmarks/bench_kernels.py [--repeats 5]

Both flavours are imported from the same module, so the environment flag
does not matter here.  The first numba call (cache load or compile) is done
before timing.  Max |difference| between the twins is reported alongside.
"""

import argparse
import time

import numpy as np

from transcendent_lab import kernels
from transcendent_lab.core_numerics import binomial_float


def best(fn, args, repeats):
    fn(*args)
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases():
    j = np.arange(1, 10**6 + 1, dtype=np.float64)
    wallis = 1.0 / (4.0 * j * j - 1.0)
    grid = np.geomspace(1e-3, 1e6, 10**5)
    size = 63
    binom = np.array([[binomial_float(n, k) if k <= n else 0.0 for k in range(size)] for n in range(size)])
    logs = np.log(1.0 + np.arange(size))
    return [
        ("prod_one_plus (1e6 Wallis factors)", "prod_one_plus", (wallis,)),
        ("cumprod_one_plus (1e6 Wallis factors)", "cumprod_one_plus", (wallis,)),
        ("log_gamma_array (1e5 points)", "log_gamma_array", (grid,)),
        ("lerch_direct (z=0.999, s=2, u=1)", "lerch_direct", (0.999, 2.0, 1.0, 10**5, 1e-13)),
        ("alt_binomial_rows (n <= 62)", "alt_binomial_rows", (binom, logs)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    opts = parser.parse_args()

    print(f"{'kernel':<40} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8} {'max |diff|':>11}")
    for label, name, args in cases():
        t_nb, out_nb = best(getattr(kernels, f"_{name}_nb"), args, opts.repeats)
        t_np, out_np = best(getattr(kernels, f"_{name}_np"), args, opts.repeats)
        a = np.atleast_1d(np.asarray(out_nb[0] if isinstance(out_nb, tuple) else out_nb, dtype=float))
        b = np.atleast_1d(np.asarray(out_np[0] if isinstance(out_np, tuple) else out_np, dtype=float))
        diff = float(np.max(np.abs(a - b)))
        print(f"{label:<40} {t_nb * 1e3:>10.3f} {t_np * 1e3:>10.3f} {t_np / t_nb:>7.1f}x {diff:>11.2e}")


if __name__ == "__main__":
    main()
