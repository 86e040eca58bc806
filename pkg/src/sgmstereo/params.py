"""Shared configuration types for the disparity pipeline."""

from __future__ import annotations

from dataclasses import dataclass

Direction = tuple[int, int]

# Canonical direction order; the 2-, 4- and 8-direction sets are prefixes.
_ALL_DIRECTIONS: tuple[Direction, ...] = (
    (1, 0),
    (0, 1),
    (-1, 0),
    (0, -1),
    (1, 1),
    (-1, 1),
    (1, -1),
    (-1, -1),
)

PATH_SETS: dict[int, tuple[Direction, ...]] = {
    2: _ALL_DIRECTIONS[:2],
    4: _ALL_DIRECTIONS[:4],
    8: _ALL_DIRECTIONS,
}

# Hamming costs peak at 31, so p2 <= 224 keeps every aggregated cost <= 255
# and the volumes can stay single-byte.
MAX_COST = 31
MAX_P2 = 255 - MAX_COST


@dataclass(frozen=True)
class SgmParams:
    """Disparity search range, smoothness penalties and path-direction set.

    ``p1`` penalises one-level disparity changes between neighbouring pixels
    along a path, ``p2`` penalises larger jumps.  ``paths`` selects how many
    scan directions contribute to the smoothing (2: left-to-right and
    top-to-bottom; 4: adds the reverse sweeps; 8: adds the four diagonals).
    """

    disparities: int = 128
    p1: int = 7
    p2: int = 84
    paths: int = 4

    def __post_init__(self) -> None:
        if not isinstance(self.disparities, int) or not 1 <= self.disparities <= 256:
            raise ValueError(f"disparities must be an integer in [1, 256], got {self.disparities!r}")
        if not isinstance(self.p1, int) or not isinstance(self.p2, int):
            raise ValueError("p1 and p2 must be integers")
        if not 0 < self.p1 < self.p2 <= MAX_P2:
            raise ValueError(
                f"penalties must satisfy 0 < p1 < p2 <= {MAX_P2}, got p1={self.p1}, p2={self.p2}"
            )
        if self.paths not in PATH_SETS:
            raise ValueError(f"paths must be one of {sorted(PATH_SETS)}, got {self.paths!r}")

    @property
    def directions(self) -> tuple[Direction, ...]:
        return PATH_SETS[self.paths]
