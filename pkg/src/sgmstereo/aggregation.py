"""Directional smoothing of the matching-cost volume.

For a direction r = (rx, ry), every maximal straight line across the image in
that direction is relaxed front to back: a pixel's smoothed cost at disparity
d is its own matching cost plus the cheapest way to continue from the
predecessor pixel (stay at d, move one level for p1, or jump from the
predecessor's best level for p2), minus the predecessor's best cost so the
values stay bounded.  Each output cell lands in [cost, cost + p2], which is
why single-byte storage is exact for Hamming costs.

Lines are mutually independent: slices perpendicular to the direction are
relaxed together as one vectorised front, and row/column chunks of a volume
can be processed by independent workers with bit-identical results.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .params import Direction, SgmParams


class _Scratch:
    """Preallocated per-walk buffers; front_size is the slice extent."""

    def __init__(self, front_size: int, disparities: int):
        self.prev16 = np.empty((front_size, disparities), dtype=np.uint16)
        self.cand = np.empty((front_size, disparities), dtype=np.uint16)
        self.tmp = np.empty((front_size, max(disparities - 1, 0)), dtype=np.uint16)
        self.pmin = np.empty(front_size, dtype=np.uint16)
        self.slab_a = np.empty((front_size, disparities), dtype=np.uint8)
        self.slab_b = np.empty((front_size, disparities), dtype=np.uint8)


def _relax(prev: np.ndarray, cost: np.ndarray, p1: int, p2: int, s: _Scratch, out: np.ndarray) -> np.ndarray:
    """One recurrence step: relax a whole front against its predecessor front.

    ``prev`` and ``cost`` are (front, D) uint8; the result is written to
    ``out`` (uint8).  Intermediates are uint16 because prev + p1/p2 can
    exceed one byte before the running minimum is subtracted back out.
    """
    disparities = prev.shape[1]
    np.copyto(s.prev16, prev)
    np.min(s.prev16, axis=1, out=s.pmin)
    np.copyto(s.cand, s.prev16)
    if disparities > 1:
        np.add(s.prev16[:, :-1], p1, out=s.tmp)
        np.minimum(s.cand[:, 1:], s.tmp, out=s.cand[:, 1:])
        np.add(s.prev16[:, 1:], p1, out=s.tmp)
        np.minimum(s.cand[:, :-1], s.tmp, out=s.cand[:, :-1])
    s.pmin += p2
    np.minimum(s.cand, s.pmin[:, None], out=s.cand)
    s.pmin -= p2
    np.add(s.cand, cost, out=s.cand)
    np.subtract(s.cand, s.pmin[:, None], out=s.cand)
    np.copyto(out, s.cand, casting="unsafe")  # exact: bounded by cost + p2 <= 255
    return out


def _walk(mc: np.ndarray, direction: Direction, p1: int, p2: int) -> Iterator[tuple[object, np.ndarray]]:
    """Walk ``mc`` along ``direction``, yielding one relaxed front per step.

    Yields ``(index, slab)`` where ``volume[index]`` addresses the (front, D)
    block the slab belongs to.  The slab buffer is reused two steps later, so
    consumers must copy or fold it before advancing.
    """
    rx, ry = direction
    height, width, disparities = mc.shape
    if ry == 0:
        front = height
        steps = range(width) if rx > 0 else range(width - 1, -1, -1)
        index_of = lambda x: (slice(None), x)  # noqa: E731
    else:
        front = width
        steps = range(height) if ry > 0 else range(height - 1, -1, -1)
        index_of = lambda y: y  # noqa: E731

    s = _Scratch(front, disparities)
    shift_buf = np.zeros((front, disparities), dtype=np.uint8) if rx != 0 and ry != 0 else None
    enter = 0 if rx > 0 else width - 1  # diagonal column with no predecessor
    prev: np.ndarray | None = None
    for t in steps:
        cost = mc[index_of(t)]
        cur = s.slab_a if prev is not s.slab_a else s.slab_b
        if prev is None:
            np.copyto(cur, cost)
        elif shift_buf is None:
            _relax(prev, cost, p1, p2, s, out=cur)
        else:
            # diagonal: the predecessor of column x on this front is column
            # x - rx of the previous front
            if rx > 0:
                shift_buf[1:] = prev[:-1]
            else:
                shift_buf[:-1] = prev[1:]
            _relax(shift_buf, cost, p1, p2, s, out=cur)
            cur[enter] = cost[enter]
        yield index_of(t), cur
        prev = cur


def _check_volume(mc: np.ndarray, params: SgmParams) -> None:
    if mc.ndim != 3 or mc.size == 0:
        raise ValueError(f"expected a non-empty (H, W, D) cost volume, got shape {mc.shape}")
    if mc.dtype != np.uint8:
        raise ValueError(f"cost volume must be uint8, got {mc.dtype}")
    if mc.shape[2] != params.disparities:
        raise ValueError(f"volume has {mc.shape[2]} disparity levels, params expect {params.disparities}")
    peak = int(mc.max())
    if peak > 255 - params.p2:
        raise ValueError(
            f"cost volume peak {peak} with p2={params.p2} would overflow single-byte aggregation"
        )


def aggregate_axis_chunk(
    mc: np.ndarray, out: np.ndarray, direction: Direction, p1: int, p2: int, lo: int, hi: int
) -> None:
    """Aggregate an axis-aligned direction over a slice range.

    For horizontal directions [lo, hi) selects rows, for vertical directions
    columns; every selected line is a complete path, so chunked and
    single-call execution agree bit for bit.
    """
    rx, ry = direction
    if rx != 0 and ry != 0:
        raise ValueError("diagonal directions couple columns across a front and cannot be chunked")
    if ry == 0:
        sub_mc, sub_out = mc[lo:hi], out[lo:hi]
    else:
        sub_mc, sub_out = mc[:, lo:hi], out[:, lo:hi]
    for index, slab in _walk(sub_mc, direction, p1, p2):
        sub_out[index] = slab


def aggregate_full(mc: np.ndarray, out: np.ndarray, direction: Direction, p1: int, p2: int) -> None:
    """Aggregate one direction over the whole volume into ``out``."""
    for index, slab in _walk(mc, direction, p1, p2):
        out[index] = slab


def aggregate_path(mc: np.ndarray, direction: Direction, params: SgmParams) -> np.ndarray:
    """Smooth the cost volume along one path direction."""
    mc = np.asarray(mc)
    _check_volume(mc, params)
    rx, ry = direction
    if rx not in (-1, 0, 1) or ry not in (-1, 0, 1) or (rx == 0 and ry == 0):
        raise ValueError(f"invalid path direction {direction!r}")
    out = np.empty_like(mc)
    aggregate_full(mc, out, direction, params.p1, params.p2)
    return out


def aggregate_all(mc: np.ndarray, params: SgmParams) -> list[np.ndarray]:
    """Aggregate every direction of the configured path set, in set order."""
    return [aggregate_path(mc, direction, params) for direction in params.directions]
