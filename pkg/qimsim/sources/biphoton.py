from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from dataclasses import field

import numpy as np
from numpy.typing import NDArray

from qimsim.exceptions import ParaxialViolation
from qimsim.grid import SPEED_OF_LIGHT
from qimsim.grid import Axis
from qimsim.grid import WaveContext
from qimsim.sources.profiles import ModeProfile
from qimsim.sources.profiles import profile_amplitudes

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectralAmplitude:
    """Detuning samples nu (rad/s) with amplitudes u(nu); monochromatic by default."""

    detunings: tuple[float, ...] = (0.0,)
    amplitudes: tuple[complex, ...] = (1.0,)


@dataclass(frozen=True)
class BiphotonSource:
    """Down-converted pair from a plane-wave pump; the idler mode of p is -p."""

    omega_p: float
    profile: ModeProfile = ModeProfile.FLAT
    sigma: float | None = None
    spectrum: SpectralAmplitude = field(default_factory=SpectralAmplitude)

    @classmethod
    def from_pump_wavelength(cls, wavelength: float, **kwargs) -> BiphotonSource:  # noqa: ANN003
        return cls(omega_p=2.0 * math.pi * SPEED_OF_LIGHT / wavelength, **kwargs)

    @property
    def context(self) -> WaveContext:
        """Degenerate signal and idler frequency omega_p / 2."""
        return WaveContext(self.omega_p / 2.0)

    @staticmethod
    def pairing(p: NDArray[np.float64] | float) -> NDArray[np.float64] | float:
        return -p


def spdc_mode_weights(src: BiphotonSource, mode_axis: Axis) -> NDArray[np.float64]:
    """
    Mode weights f(p) of the pair state, normalized on the grid.

    Raises:
        ParaxialViolation: If the mode axis reaches omega_p / (2 c).
    """
    p_max = max(abs(mode_axis.x_min), abs(mode_axis.x_max))
    limit = src.omega_p / (2.0 * SPEED_OF_LIGHT)
    if p_max >= limit:
        raise ParaxialViolation(
            f"Mode axis reaches |p|={p_max:.4g} rad/m, beyond the paraxial bound "
            f"{limit:.4g} rad/m."
        )
    logger.debug(f"SPDC weights: {src.profile.value} profile on {mode_axis.n} modes")
    return profile_amplitudes(src.profile, mode_axis, src.sigma)
