"""Compare the numba and numpy steady-state kernels.

    python benchmarks/bench_kernels.py [--sizes 20,100,400] [--repeat 5]

Also times a full N=100, 301-point sweep on whichever path is active
(set DICKE_NESS_NO_NUMBA=1 to time the numpy fallback end to end).
"""
import argparse
import math
import time

import numpy as np

from dicke_ness import _accel, _kernels
from dicke_ness.sweep import SweepSpec, run_sweep


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="20,50,100,200,400")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"numba available: {_accel.HAVE_NUMBA}, active path: {'numba' if _accel.USE_NUMBA else 'numpy'}")
    print(f"{'N':>5} {'numpy [ms]':>12} {'numba [ms]':>12} {'speedup':>8} {'max |diff|':>11}")
    for n in (int(s) for s in args.sizes.split(",")):
        lf = _kernels.log_ladder_table(n)
        log_g = math.log(n / 2)  # omega_s = 1
        ref = _kernels.ness_log_magnitude_numpy(lf, log_g)
        t_np = best_of(lambda: _kernels.ness_log_magnitude_numpy(lf, log_g), args.repeat)
        if _accel.HAVE_NUMBA:
            fast = _kernels.ness_log_magnitude_jit(lf, log_g)  # compile outside the timing
            t_jit = best_of(lambda: _kernels.ness_log_magnitude_jit(lf, log_g), args.repeat)
            diff = np.abs(fast - ref).max()
            print(f"{n:>5} {1e3 * t_np:>12.3f} {1e3 * t_jit:>12.3f} {t_np / t_jit:>8.1f} {diff:>11.2e}")
        else:
            print(f"{n:>5} {1e3 * t_np:>12.3f} {'-':>12} {'-':>8} {'-':>11}")

    spec = SweepSpec(n_atoms=(100,), count=301)
    t0 = time.perf_counter()
    run_sweep(spec)
    print(f"sweep N=100 x 301 points: {time.perf_counter() - t0:.2f} s")


if __name__ == "__main__":
    main()
