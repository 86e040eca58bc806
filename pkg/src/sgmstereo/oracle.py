"""Scalar reference implementations of every pipeline stage.

Everything in this module is written as plain loops over pixels and
disparities with ordinary Python integers, sharing no stage code with the
vectorised modules.  The duplication is deliberate: these functions are the
ground truth that differential tests compare the optimised lane against,
bit for bit, and double as executable documentation of the algorithms.

numpy appears only at the boundaries (inputs are converted to nested lists,
results are packed back into arrays); none of the arithmetic uses it.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .params import Direction, SgmParams


def _clamp(v: int, hi: int) -> int:
    if v < 0:
        return 0
    if v > hi:
        return hi
    return v


def oracle_census(image: np.ndarray) -> np.ndarray:
    """Census-transform via literal per-pixel, per-pair loops.

    Pair order: columns dx = 1..4 sweeping rows dy = -3..3, then the centre
    column rows dy = 1..3; the first pair lands in the most significant of
    the 31 feature bits.  Out-of-image reads clamp to the nearest edge.
    """
    height, width = image.shape
    pix = image.tolist()
    xhi, yhi = width - 1, height - 1
    out = []
    for y in range(height):
        row = []
        for x in range(width):
            bits = 0
            for dx in range(1, 5):
                for dy in range(-3, 4):
                    u = pix[_clamp(y + dy, yhi)][_clamp(x + dx, xhi)]
                    v = pix[_clamp(y - dy, yhi)][_clamp(x - dx, xhi)]
                    bits = (bits << 1) | (1 if u >= v else 0)
            for dy in range(1, 4):
                u = pix[_clamp(y + dy, yhi)][x]
                v = pix[_clamp(y - dy, yhi)][x]
                bits = (bits << 1) | (1 if u >= v else 0)
            row.append(bits)
        out.append(row)
    return np.array(out, dtype=np.uint32)


def oracle_matching_cost(base: np.ndarray, match: np.ndarray, disparities: int) -> np.ndarray:
    """Hamming-distance cost cube, one popcount per (x, y, d)."""
    height, width = base.shape
    b = base.tolist()
    m = match.tolist()
    out = []
    for y in range(height):
        brow, mrow = b[y], m[y]
        plane = []
        for x in range(width):
            feature = brow[x]
            cell = []
            for d in range(disparities):
                xm = x - d
                if xm < 0:
                    xm = 0
                cell.append((feature ^ mrow[xm]).bit_count())
            plane.append(cell)
        out.append(plane)
    return np.array(out, dtype=np.uint8)


def oracle_sgm(mc: np.ndarray, direction: Direction, params: SgmParams) -> np.ndarray:
    """Path-cost recurrence evaluated cell by cell with explicit predecessor
    lookups.

    Walks every maximal line in ``direction`` from its start pixel; the start
    pixel copies the matching cost, later pixels add the cheapest
    continuation from the predecessor and subtract the predecessor's best
    cost.  Disparity neighbours outside [0, D) are simply not candidates.
    """
    rx, ry = direction
    height, width, disparities = mc.shape
    p1, p2 = params.p1, params.p2
    cost = mc.tolist()
    out = [[None] * width for _ in range(height)]
    for sy in range(height):
        for sx in range(width):
            px, py = sx - rx, sy - ry
            if 0 <= px < width and 0 <= py < height:
                continue  # predecessor inside the image: not a path start
            x, y = sx, sy
            prev = None
            while 0 <= x < width and 0 <= y < height:
                c = cost[y][x]
                if prev is None:
                    cur = list(c)
                else:
                    pmin = min(prev)
                    jump = pmin + p2
                    cur = []
                    for d in range(disparities):
                        best = prev[d]
                        if d > 0:
                            step = prev[d - 1] + p1
                            if step < best:
                                best = step
                        if d + 1 < disparities:
                            step = prev[d + 1] + p1
                            if step < best:
                                best = step
                        if jump < best:
                            best = jump
                        cur.append(c[d] + best - pmin)
                out[y][x] = cur
                prev = cur
                x += rx
                y += ry
    return np.array(out, dtype=np.uint8)


def oracle_select_disparity(volumes: Sequence[np.ndarray]) -> np.ndarray:
    """Sum path costs per pixel, keep the lowest disparity with minimal sum."""
    vols = [v.tolist() for v in volumes]
    height, width, disparities = volumes[0].shape
    out = []
    for y in range(height):
        row = []
        for x in range(width):
            cells = [v[y][x] for v in vols]
            best_d = 0
            best = sum(c[0] for c in cells)
            for d in range(1, disparities):
                total = sum(c[d] for c in cells)
                if total < best:
                    best = total
                    best_d = d
            row.append(best_d)
        out.append(row)
    return np.array(out, dtype=np.int32)


def oracle_median_filter(disparity: np.ndarray) -> np.ndarray:
    """3x3 median on interior pixels, borders copied through."""
    height, width = disparity.shape
    src = disparity.tolist()
    out = [row[:] for row in src]
    for y in range(1, height - 1):
        for x in range(1, width - 1):
            window = sorted(
                src[y + dy][x + dx] for dy in (-1, 0, 1) for dx in (-1, 0, 1)
            )
            out[y][x] = window[4]
    return np.array(out, dtype=disparity.dtype)


def oracle_pipeline(
    left: np.ndarray, right: np.ndarray, params: SgmParams, median: bool = True
) -> np.ndarray:
    """Full scalar pipeline: census, matching cost, per-direction smoothing,
    winner-takes-all, optional median filter."""
    census_left = oracle_census(left)
    census_right = oracle_census(right)
    mc = oracle_matching_cost(census_left, census_right, params.disparities)
    volumes = [oracle_sgm(mc, direction, params) for direction in params.directions]
    disp = oracle_select_disparity(volumes)
    if median:
        disp = oracle_median_filter(disp)
    return disp
