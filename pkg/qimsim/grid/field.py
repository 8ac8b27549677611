from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from numpy.typing import NDArray

from qimsim.exceptions import InvalidGrid
from qimsim.grid.axis import Axis


@dataclass(frozen=True, slots=True, eq=False)
class ComplexField:
    """Complex amplitude sampled on an Axis. Samples are stored read-only."""

    axis: Axis
    samples: NDArray[np.complex128]

    def __post_init__(self) -> None:
        samples = np.array(self.samples, dtype=np.complex128, copy=True)
        if samples.ndim != 1 or samples.shape[0] != self.axis.n:
            raise InvalidGrid(
                f"Field has shape {samples.shape}, expected ({self.axis.n},)."
            )
        if not np.all(np.isfinite(samples)):
            raise InvalidGrid("Field samples must all be finite.")
        samples.flags.writeable = False
        object.__setattr__(self, "samples", samples)

    @classmethod
    def from_function(cls, axis: Axis, func) -> ComplexField:  # noqa: ANN001
        """Samples ``func`` (vectorized over numpy arrays) at the axis midpoints."""
        return cls(axis, np.asarray(func(axis.points()), dtype=np.complex128))

    @classmethod
    def constant(cls, axis: Axis, value: complex = 1.0) -> ComplexField:
        return cls(axis, np.full(axis.n, value, dtype=np.complex128))

    def with_samples(self, samples: ArrayLike) -> ComplexField:
        return ComplexField(self.axis, np.asarray(samples))

    def intensity(self) -> NDArray[np.float64]:
        return np.abs(self.samples) ** 2

    def power(self) -> float:
        """Sum of |samples|^2 times the sample spacing."""
        return float(np.sum(self.intensity()) * self.axis.spacing)
