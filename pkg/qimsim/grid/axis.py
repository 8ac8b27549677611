from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from qimsim.exceptions import InvalidGrid


@dataclass(frozen=True, slots=True)
class Axis:
    """
    Uniform 1-D sampling axis using the midpoint convention.

    Sample ``k`` sits at ``x_min + (k + 1/2) * spacing`` so no sample ever lands
    on the interval ends.
    """

    x_min: float
    x_max: float
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidGrid(f"Axis needs at least 2 samples, got n={self.n}.")
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise InvalidGrid(f"Axis bounds must be finite: [{self.x_min}, {self.x_max}]")
        if self.x_max <= self.x_min:
            raise InvalidGrid(
                f"Axis requires x_max > x_min, got [{self.x_min}, {self.x_max}]."
            )

    @classmethod
    def centered(cls, extent: float, n: int) -> Axis:
        """Axis of total width ``extent`` symmetric about the origin."""
        return cls(-extent / 2.0, extent / 2.0, n)

    @classmethod
    def from_spacing(cls, first: float, spacing: float, n: int) -> Axis:
        """Axis whose first midpoint is ``first`` and whose step is ``spacing``."""
        x_min = first - spacing / 2.0
        return cls(x_min, x_min + n * spacing, n)

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / self.n

    @property
    def extent(self) -> float:
        return self.x_max - self.x_min

    def points(self) -> NDArray[np.float64]:
        return self.x_min + (np.arange(self.n) + 0.5) * self.spacing

    def nearest_index(self, value: float) -> int:
        """Index of the sample closest to ``value``; -1 if it falls outside the axis."""
        if value < self.x_min or value >= self.x_max:
            return -1
        return min(int((value - self.x_min) / self.spacing), self.n - 1)

    def same_as(self, other: Axis, rtol: float = 1e-12) -> bool:
        if self.n != other.n:
            return False
        scale = max(abs(self.x_min), abs(self.x_max), self.extent)
        return (
            abs(self.x_min - other.x_min) <= rtol * scale
            and abs(self.x_max - other.x_max) <= rtol * scale
        )
