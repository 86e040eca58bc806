#!/usr/bin/env python3
"""Recompute the frozen shift-recovery reference with the scalar lane.

The acceptance suite pins the exact number of interior pixels that recover a
uniform 10-pixel shift on the 320x240 synthetic pair (seed 42, D=64, 4 paths,
default penalties).  This script re-derives that number with the pure-Python
reference pipeline; expect a couple of minutes of runtime.
"""

import time

from sgmstereo import SgmParams, shift_recovery_mask, shifted_pair
from sgmstereo.oracle import oracle_pipeline


def main() -> None:
    t0 = time.perf_counter()
    left, right = shifted_pair(320, 240, 10, seed=42)
    params = SgmParams(disparities=64, p1=7, p2=84, paths=4)
    disparity = oracle_pipeline(left, right, params)
    mask = shift_recovery_mask(320, 240, 10) != 0
    interior = int(mask.sum())
    exact = int((disparity[mask] == 10).sum())
    print(f"interior pixels: {interior}")
    print(f"exact recoveries: {exact}")
    print(f"rate: {exact / interior:.6f}")
    print(f"elapsed: {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
