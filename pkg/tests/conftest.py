"""Shared hypothesis strategies and helpers for the test suite."""

from __future__ import annotations

import numpy as np
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from sgmstereo import SgmParams


def gray_images(max_width: int = 24, max_height: int = 18, min_width: int = 1, min_height: int = 1):
    """Small uint8 images of arbitrary shape."""
    return st.tuples(
        st.integers(min_height, max_height), st.integers(min_width, max_width)
    ).flatmap(lambda hw: hnp.arrays(np.uint8, hw, elements=st.integers(0, 255)))


def image_pairs(max_width: int = 24, max_height: int = 18):
    """Two uint8 images of the same random shape."""
    return st.tuples(
        st.integers(1, max_height), st.integers(1, max_width)
    ).flatmap(
        lambda hw: st.tuples(
            hnp.arrays(np.uint8, hw, elements=st.integers(0, 255)),
            hnp.arrays(np.uint8, hw, elements=st.integers(0, 255)),
        )
    )


def census_images(max_width: int = 16, max_height: int = 12):
    """Feature rasters with arbitrary 31-bit words (bit 31 clear)."""
    return st.tuples(
        st.integers(1, max_height), st.integers(1, max_width)
    ).flatmap(lambda hw: hnp.arrays(np.uint32, hw, elements=st.integers(0, 2**31 - 1)))


def census_pairs(max_width: int = 16, max_height: int = 12):
    return st.tuples(
        st.integers(1, max_height), st.integers(1, max_width)
    ).flatmap(
        lambda hw: st.tuples(
            hnp.arrays(np.uint32, hw, elements=st.integers(0, 2**31 - 1)),
            hnp.arrays(np.uint32, hw, elements=st.integers(0, 2**31 - 1)),
        )
    )


def hamming_volumes(max_width: int = 10, max_height: int = 8, max_disparities: int = 8):
    """Cost volumes with Hamming-range values (<= 31), as matching_cost makes."""
    return st.tuples(
        st.integers(1, max_height), st.integers(1, max_width), st.integers(1, max_disparities)
    ).flatmap(lambda s: hnp.arrays(np.uint8, s, elements=st.integers(0, 31)))


def sgm_params(disparities: int):
    """Valid penalty pairs for a fixed disparity count."""
    return st.integers(1, 64).flatmap(
        lambda p1: st.integers(p1 + 1, 224).map(
            lambda p2: SgmParams(disparities=disparities, p1=p1, p2=p2, paths=8)
        )
    )
