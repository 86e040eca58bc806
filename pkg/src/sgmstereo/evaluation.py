"""Disparity accuracy metrics and disparity-to-depth conversion."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import SgmParams

DEFAULT_THRESHOLD = 3


@dataclass(frozen=True)
class EvalResult:
    """Bad-pixel statistics: a pixel is bad when |est - gt| > threshold."""

    total: int
    bad: int
    accuracy: float
    threshold: int


@dataclass(frozen=True)
class CameraGeometry:
    """Focal length in pixels and stereo baseline in meters."""

    focal: float
    baseline: float

    def __post_init__(self) -> None:
        if self.focal <= 0 or self.baseline <= 0:
            raise ValueError(f"focal and baseline must be positive, got {self.focal}, {self.baseline}")


def bad_pixel_rate(
    est: np.ndarray,
    gt: np.ndarray,
    mask: np.ndarray | None = None,
    threshold: int = DEFAULT_THRESHOLD,
) -> EvalResult:
    """Fraction of evaluated pixels whose disparity error exceeds threshold.

    ``mask`` selects the pixels to evaluate (nonzero means evaluate, e.g. a
    non-occluded mask); without it every pixel counts.
    """
    est = np.asarray(est)
    gt = np.asarray(gt)
    if est.shape != gt.shape:
        raise ValueError(f"shape mismatch: estimate {est.shape} vs ground truth {gt.shape}")
    if threshold < 0:
        raise ValueError(f"threshold must be >= 0, got {threshold}")
    diff = np.abs(est.astype(np.int64) - gt.astype(np.int64))
    if mask is not None:
        mask = np.asarray(mask)
        if mask.shape != est.shape:
            raise ValueError(f"mask shape {mask.shape} does not match images {est.shape}")
        diff = diff[mask != 0]
    total = int(diff.size)
    if total == 0:
        raise ValueError("no pixels selected for evaluation")
    bad = int(np.count_nonzero(diff > threshold))
    return EvalResult(total=total, bad=bad, accuracy=1.0 - bad / total, threshold=threshold)


def disparity_to_depth(disparity: float, geometry: CameraGeometry) -> float:
    """Triangulated depth in meters: focal * baseline / disparity."""
    if disparity <= 0:
        raise ValueError(f"disparity must be positive to triangulate, got {disparity}")
    return geometry.focal * geometry.baseline / disparity


def metrics_csv(result: EvalResult, params: SgmParams, width: int, height: int) -> str:
    """One CSV line: width,height,D,paths,P1,P2,threshold,total,bad,accuracy."""
    return (
        f"{width},{height},{params.disparities},{params.paths},{params.p1},{params.p2},"
        f"{result.threshold},{result.total},{result.bad},{result.accuracy:.6f}"
    )
