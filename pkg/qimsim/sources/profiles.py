from __future__ import annotations

import enum

import numpy as np
from numpy.typing import NDArray

from qimsim.exceptions import InvalidDistribution
from qimsim.grid import Axis


class ModeProfile(str, enum.Enum):
    FLAT = "flat"
    GAUSSIAN = "gaussian"


def profile_amplitudes(
    profile: ModeProfile, mode_axis: Axis, sigma: float | None = None
) -> NDArray[np.float64]:
    """Mode amplitudes f(p) on ``mode_axis`` normalized so that sum |f|^2 dp = 1."""
    p = mode_axis.points()
    match profile:
        case ModeProfile.FLAT:
            f = np.ones_like(p)
        case ModeProfile.GAUSSIAN:
            if sigma is None or sigma <= 0:
                raise InvalidDistribution("Gaussian mode profile needs sigma > 0.")
            f = np.exp(-(p**2) / (2.0 * sigma**2))
    norm = np.sum(f**2) * mode_axis.spacing
    if norm <= 0:
        raise InvalidDistribution("Mode profile vanishes on the mode axis.")
    return f / np.sqrt(norm)


def partner_indices(mode_axis: Axis, scale: float) -> NDArray[np.int64]:
    """
    Index of the bin nearest to ``p / scale`` for every mode p, or -1 off grid.

    ``scale = -1`` is the SPDC pairing p -> -p, an exact index reversal on a
    symmetric axis.
    """
    return np.array(
        [mode_axis.nearest_index(p / scale) for p in mode_axis.points()], dtype=np.int64
    )
