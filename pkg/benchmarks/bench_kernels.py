"""Timing comparison of the compiled and pure-numpy kernel backends.

Run:  python benchmarks/bench_kernels.py [--sizes 1000,10000,100000] [--repeat 30]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from crossplit import _pykernels

try:
    from crossplit import _ckernels
except ImportError:
    _ckernels = None


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def run(sizes, repeat):
    rng = np.random.default_rng(0)
    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("c", _ckernels))

    print(f"{'kernel':<24} {'n':>8} " + " ".join(f"{name:>12}" for name, _ in backends) + f" {'speedup':>9}")
    for n in sizes:
        xs = np.sort(rng.standard_normal(n))
        series = rng.standard_normal(n)
        bandwidth = max(1, int(1.5 * n ** (1 / 3)))
        cases = [
            ("split_point_sorted", (xs,)),
            ("segment_intercepts", (xs,)),
            ("bartlett_lrv", (series, bandwidth)),
        ]
        for label, args in cases:
            times = []
            for _, impl in backends:
                fn = getattr(
                    impl,
                    "segment_intercepts_sorted" if label == "segment_intercepts" else label,
                )
                times.append(best_of(repeat, fn, *args))
            cols = " ".join(f"{t * 1e6:>10.1f}us" for t in times)
            speed = f"{times[0] / times[-1]:>8.1f}x" if len(times) == 2 else "      n/a"
            print(f"{label:<24} {n:>8} {cols} {speed}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="1000,10000,100000")
    ap.add_argument("--repeat", type=int, default=30)
    args = ap.parse_args()
    run([int(s) for s in args.sizes.split(",")], args.repeat)


if __name__ == "__main__":
    main()
