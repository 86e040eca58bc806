"""Winner-takes-all disparity selection and median post-filtering."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .aggregation import _check_volume, _walk
from .params import Direction, SgmParams


def _check_volumes(volumes: Sequence[np.ndarray]) -> tuple[int, int, int]:
    if not volumes:
        raise ValueError("need at least one aggregated volume")
    for v in volumes:
        if v.ndim != 3 or v.size == 0:
            raise ValueError(f"expected non-empty (H, W, D) volumes, got shape {v.shape}")
        if v.dtype != np.uint8:
            raise ValueError(f"aggregated volumes must be uint8, got {v.dtype}")
        if v.shape != volumes[0].shape:
            raise ValueError(f"shape mismatch between volumes: {v.shape} vs {volumes[0].shape}")
    return volumes[0].shape


def select_rows(volumes: Sequence[np.ndarray], out: np.ndarray, y0: int, y1: int) -> None:
    """Winner-takes-all over rows [y0, y1): sum the per-direction costs and
    keep the lowest disparity attaining the minimum.

    The sum of up to eight byte volumes peaks at 8 * 255, so a 16-bit
    accumulator is exact.
    """
    total = np.zeros(volumes[0][y0:y1].shape, dtype=np.uint16)
    for v in volumes:
        total += v[y0:y1]
    out[y0:y1] = np.argmin(total, axis=2)


def select_disparity(volumes: Sequence[np.ndarray], params: SgmParams | None = None) -> np.ndarray:
    """Per-pixel disparity minimising the summed aggregated cost.

    Ties break toward the lowest disparity index.
    """
    height, width, disparities = _check_volumes(volumes)
    if params is not None and disparities != params.disparities:
        raise ValueError(f"volumes have {disparities} disparity levels, params expect {params.disparities}")
    out = np.empty((height, width), dtype=np.int32)
    select_rows(volumes, out, 0, height)
    return out


def median_rows(src: np.ndarray, out: np.ndarray, y0: int, y1: int) -> None:
    """Median-filter interior rows intersecting [y0, y1) into ``out``.

    ``out`` must already hold the source values: border pixels pass through
    unfiltered, and this only rewrites interior pixels of the given rows.
    """
    height, width = src.shape
    lo = max(y0, 1)
    hi = min(y1, height - 1)
    if lo >= hi or width < 3:
        return
    rows = hi - lo
    stack = np.empty((9, rows, width - 2), dtype=src.dtype)
    k = 0
    for dy in (-1, 0, 1):
        for dx in (0, 1, 2):
            stack[k] = src[lo + dy : hi + dy, dx : width - 2 + dx]
            k += 1
    stack.sort(axis=0)
    out[lo:hi, 1:-1] = stack[4]  # exact integer median of 9


def median_filter_3x3(disparity: np.ndarray) -> np.ndarray:
    """3x3 median filter; borders are copied unchanged."""
    disparity = np.asarray(disparity)
    if disparity.ndim != 2 or disparity.size == 0:
        raise ValueError(f"expected a non-empty 2-d map, got shape {disparity.shape}")
    out = disparity.copy()
    median_rows(disparity, out, 0, disparity.shape[0])
    return out


def fused_last_path_select(
    mc: np.ndarray,
    partial: Sequence[np.ndarray],
    last_direction: Direction,
    params: SgmParams,
) -> np.ndarray:
    """Aggregate the final direction and select disparities in one sweep.

    ``partial`` holds the already-aggregated volumes of every other
    direction.  The last direction's costs are folded into the running sum
    front by front and never materialised, saving one full volume of
    traffic; the result is bit-identical to aggregating it separately and
    calling :func:`select_disparity`.
    """
    mc = np.asarray(mc)
    _check_volume(mc, params)
    if len(partial) != len(params.directions) - 1:
        raise ValueError(
            f"expected {len(params.directions) - 1} partial volumes for paths={params.paths}, "
            f"got {len(partial)}"
        )
    for v in partial:
        if v.shape != mc.shape:
            raise ValueError(f"shape mismatch between volumes: {v.shape} vs {mc.shape}")
    height, width, _ = mc.shape
    total = np.zeros(mc.shape, dtype=np.uint16)
    for v in partial:
        total += v
    out = np.empty((height, width), dtype=np.int32)
    for index, slab in _walk(mc, last_direction, params.p1, params.p2):
        out[index] = np.argmin(total[index] + slab, axis=-1)
    return out
