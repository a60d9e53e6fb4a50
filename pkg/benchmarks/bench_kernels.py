"""Compare the compiled and NumPy certification kernels.

    python benchmarks/bench_kernels.py --trials 1000000 --repeat 5
"""
import argparse
import time

import numpy as np

from horadam_bi import kernels
from horadam_bi.classes import ClassKind, ClassSpec
from horadam_bi.horadam import CHEBYSHEV_SECOND
from horadam_bi.verify import certify_samples, run_verification, sample_schwarz

NUS = [0.0, 0.5, 1.0, 1.5, 3.0]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=1_000_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    spec = ClassSpec(ClassKind.ALPHA_BLEND, 0.5, CHEBYSHEV_SECOND, 0.6)
    u1, u2 = sample_schwarz(0, 0, args.trials)
    print(f"{args.trials} trials, {len(NUS)} nu values, best of {args.repeat}")
    print(f"{'backend':<8} {'kernel s':>10} {'Mtrial/s':>9} {'end-to-end s':>13}")
    results = {}
    for name in kernels.BACKENDS:
        k_time, res = best_of(lambda: certify_samples(spec, NUS, u1, u2, backend=name), args.repeat)
        e_time, _ = best_of(lambda: run_verification(spec, NUS, args.trials, seed=0, backend=name), args.repeat)
        results[name] = res
        print(f"{name:<8} {k_time:>10.4f} {args.trials / k_time / 1e6:>9.2f} {e_time:>13.4f}")
    if len(results) == 2:
        py, cy = results["python"], results["cython"]
        same = py[:2] == cy[:2] and np.allclose(py[4], cy[4], rtol=1e-12)
        print(f"backends agree: {same}")
    else:
        print("compiled kernel not available; only the NumPy backend was timed")


if __name__ == "__main__":
    main()
