#!/usr/bin/env python3
"""Time the hot per-point pipeline with and without numba compilation.

The compiled/interpreted choice is made at import time from the
WALKER4_NO_NUMBA environment variable, so this script re-launches itself in
a subprocess for each mode and prints a comparison.

    python benchmarks/bench_kernels.py [--points 400] [--repeat 3]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time


def run_worker(points: int, repeat: int) -> None:
    import numpy as np

    from walker4 import _kernels, oracle
    from walker4.verify import random_polynomial_metric

    rng = np.random.default_rng(12345)
    metric = random_polynomial_metric(rng, degree=3)
    pts = rng.uniform(-1.0, 1.0, size=(points, 4))

    def pipeline():
        acc = 0.0
        for pt in pts:
            mjf = oracle.metric_jet_field(metric, pt)
            acc += oracle.oracle_nabla_R(mjf).max_abs()
        return acc

    pipeline()  # warm-up (includes JIT compilation when enabled)
    best = min(_timed(pipeline) for _ in range(repeat))
    mode = "numba" if _kernels.NUMBA_ENABLED else "numpy"
    rate = points / best
    print(f"{mode:6s} {points:6d} points  {best * 1e3:10.1f} ms  {rate:10.0f} points/s")


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=400)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.worker:
        run_worker(args.points, args.repeat)
        return 0

    print(f"oracle pipeline (jets -> connection -> curvature -> nabla R), "
          f"{args.points} points, best of {args.repeat}", flush=True)
    for flag in ("0", "1"):
        env = dict(os.environ, WALKER4_NO_NUMBA=flag)
        cmd = [sys.executable, os.path.abspath(__file__),
               "--worker", "--points", str(args.points), "--repeat", str(args.repeat)]
        subprocess.run(cmd, env=env, check=True)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
