"""Synthetic stereo pairs with known ground-truth disparity."""

from __future__ import annotations

import numpy as np


def shifted_pair(width: int, height: int, shift: int, seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Random-texture pair where every left pixel sits ``shift`` columns to
    the right of its match: left[y, x] corresponds to right[y, x - shift].

    Both views crop a common texture, so the true disparity is uniformly
    ``shift`` with no occlusions.
    """
    if shift < 0:
        raise ValueError(f"shift must be >= 0, got {shift}")
    rng = np.random.default_rng(seed)
    texture = rng.integers(0, 256, size=(height, width + shift), dtype=np.uint8)
    left = texture[:, :width].copy()
    right = texture[:, shift:].copy()
    return left, right


def shift_recovery_mask(width: int, height: int, shift: int, census_margin: int = 4) -> np.ndarray:
    """Interior mask for shift-recovery checks: drops the ``shift`` columns
    at the left border (no true match inside the image) and a census-window
    margin on every side."""
    mask = np.zeros((height, width), dtype=np.uint8)
    x0 = max(shift, census_margin)
    mask[census_margin : height - census_margin, x0 : width - census_margin] = 1
    return mask
