#!/usr/bin/env python3
"""Throughput sweep over path-set sizes and worker counts.

Runs the compute region repeatedly on a synthetic pair and prints a table of
per-configuration frame times and fps, plus the per-stage breakdown for the
largest configuration.
"""

import argparse
import time

from sgmstereo import SgmParams, shifted_pair
from sgmstereo.pipeline import Executor


def bench(left, right, params, threads, iters):
    with Executor(left, right, params, threads=threads) as ex:
        ex.run()  # warm-up: page faults, worker spin-up
        timings: dict[str, float] = {}
        t0 = time.perf_counter()
        for _ in range(iters):
            ex.run(timings)
        elapsed = time.perf_counter() - t0
    return elapsed / iters, {k: 1000.0 * v / iters for k, v in timings.items()}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--width", type=int, default=640)
    parser.add_argument("--height", type=int, default=480)
    parser.add_argument("--disparities", type=int, default=128)
    parser.add_argument("--iters", type=int, default=3)
    parser.add_argument("--threads", type=int, nargs="+", default=[1, 2, 4, 8])
    args = parser.parse_args()

    left, right = shifted_pair(args.width, args.height, 10, seed=1)
    print(f"frame {args.width}x{args.height}, D={args.disparities}, {args.iters} iterations")
    print(f"{'paths':>5} {'threads':>7} {'ms/frame':>10} {'fps':>8}")
    last_stages = {}
    for paths in (2, 4, 8):
        params = SgmParams(disparities=args.disparities, paths=paths)
        for threads in args.threads:
            frame_s, stages = bench(left, right, params, threads, args.iters)
            print(f"{paths:>5} {threads:>7} {1000 * frame_s:>10.1f} {1 / frame_s:>8.2f}")
            last_stages = stages
    print("\nper-stage breakdown of the last configuration:")
    for name, ms in last_stages.items():
        print(f"  {name:<18s} {ms:8.2f} ms")


if __name__ == "__main__":
    main()
