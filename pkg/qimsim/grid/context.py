from __future__ import annotations

import math
from dataclasses import dataclass

from qimsim.exceptions import InvalidGrid

SPEED_OF_LIGHT = 2.99792458e8


@dataclass(frozen=True, slots=True)
class WaveContext:
    """Monochromatic wave parameters shared by every element of a bench."""

    omega: float
    c: float = SPEED_OF_LIGHT

    def __post_init__(self) -> None:
        if not (math.isfinite(self.omega) and self.omega > 0):
            raise InvalidGrid(f"Angular frequency must be positive, got {self.omega}.")

    @classmethod
    def from_wavelength(cls, wavelength: float) -> WaveContext:
        return cls(omega=2.0 * math.pi * SPEED_OF_LIGHT / wavelength)

    @classmethod
    def degenerate(cls, pump_wavelength: float) -> WaveContext:
        """Context at half the pump frequency, the degenerate down-converted pair."""
        return cls(omega=math.pi * SPEED_OF_LIGHT / pump_wavelength)

    @property
    def k(self) -> float:
        """Wavenumber omega / c in rad/m."""
        return self.omega / self.c

    @property
    def wavelength(self) -> float:
        return 2.0 * math.pi * self.c / self.omega
