"""Compare the numba and numpy insertion-scan backends.

    python benchmarks/bench_build.py --sizes 128 512 2048 --k 4 8
"""

import argparse
import time

import numpy as np

from ordered_theta import _kernels
from ordered_theta.geometry import DEFAULT_TOL, bisector


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[128, 512, 2048])
    parser.add_argument("--k", type=int, nargs="+", default=[4, 8])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    if not _kernels.HAVE_NUMBA:
        print("numba unavailable; timing the numpy path only")
    rng = np.random.default_rng(args.seed)
    print(f"{'n':>6} {'k':>3} " + " ".join(f"{b:>12}" for b in backends) + "   speedup  agree")
    for n in args.sizes:
        pts = rng.random((n, 2))
        for k in args.k:
            bis = np.array([bisector(i, k) for i in range(k)])
            results, times = {}, {}
            for b in backends:
                run = lambda b=b: _kernels.insertion_scan(
                    pts[:, 0], pts[:, 1], k, bis[:, 0], bis[:, 1], DEFAULT_TOL, backend=b
                )
                run()  # compile / warm caches
                times[b], results[b] = _time(run, args.repeat)
            agree = all(
                all(np.array_equal(x, y) for x, y in zip(results[backends[0]], results[b]))
                for b in backends
            )
            speed = times["numpy"] / times["numba"] if "numba" in times else float("nan")
            cells = " ".join(f"{times[b] * 1e3:10.2f}ms" for b in backends)
            print(f"{n:>6} {k:>3} {cells}   {speed:7.1f}x  {agree}")


if __name__ == "__main__":
    main()
