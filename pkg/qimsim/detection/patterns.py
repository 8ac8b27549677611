from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from numpy.typing import NDArray

from qimsim.exceptions import EmptyPattern
from qimsim.exceptions import InvalidGrid
from qimsim.grid import Axis
from qimsim.optics.masks import MaskProfile

NEGATIVE_TOLERANCE = 1e-12


def _clean(values: ArrayLike, shape: tuple[int, ...]) -> NDArray[np.float64]:
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.shape != shape:
        raise InvalidGrid(f"Pattern values have shape {arr.shape}, expected {shape}.")
    if not np.all(np.isfinite(arr)):
        raise InvalidGrid("Pattern values must be finite.")
    peak = float(np.max(np.abs(arr))) if arr.size else 0.0
    if np.any(arr < -NEGATIVE_TOLERANCE * max(peak, 1.0)):
        raise InvalidGrid("Pattern values must be nonnegative.")
    arr = np.clip(arr, 0.0, None)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Pattern:
    """Nonnegative rates over a detector axis."""

    axis: Axis
    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _clean(self.values, (self.axis.n,)))

    @property
    def peak(self) -> float:
        return float(np.max(self.values))

    def normalized(self) -> Pattern:
        """Copy scaled to unit peak.

        Raises:
            EmptyPattern: If every value is zero.
        """
        peak = self.peak
        if peak <= 0:
            raise EmptyPattern("Pattern is identically zero.")
        return Pattern(self.axis, self.values / peak)


@dataclass(frozen=True, eq=False)
class CoincidenceMap:
    axis1: Axis
    axis2: Axis
    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "values", _clean(self.values, (self.axis1.n, self.axis2.n))
        )

    def normalized(self) -> CoincidenceMap:
        peak = float(np.max(self.values))
        if peak <= 0:
            raise EmptyPattern("Coincidence map is identically zero.")
        return CoincidenceMap(self.axis1, self.axis2, self.values / peak)


def finish(axis: Axis, values: NDArray, raw: bool) -> Pattern:
    """Pattern from raw sums, peak-normalized unless ``raw``."""
    pattern = Pattern(axis, np.real(values))
    if pattern.peak <= 0:
        raise EmptyPattern("Pattern is identically zero.")
    return pattern if raw else pattern.normalized()


def reference_pattern(mask: MaskProfile, axis: Axis, scale: float = 1.0) -> Pattern:
    """The object |t(scale * x)|^2 sampled on ``axis``, peak-normalized."""
    values = np.abs(mask.transmission(scale * axis.points())) ** 2
    return finish(axis, values, raw=False)
