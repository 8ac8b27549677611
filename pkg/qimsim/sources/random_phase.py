from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from qimsim.grid import Axis
from qimsim.sources.profiles import ModeProfile
from qimsim.sources.profiles import profile_amplitudes
from qimsim.sources.rng import realization_rng
from qimsim.sources.rng import uniform_phases


@dataclass(frozen=True)
class RandomPhaseEnsemble:
    """Pairs whose A and B modes carry independent uniform random phases."""

    seed: int = 0
    profile: ModeProfile = ModeProfile.FLAT
    sigma: float | None = None

    def amplitudes(self, mode_axis: Axis) -> NDArray[np.float64]:
        return profile_amplitudes(self.profile, mode_axis, self.sigma)


def draw_realization(
    ens: RandomPhaseEnsemble, n_modes: int, rng: np.random.Generator | None = None
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Phases (theta_A, theta_B) for one realization; theta_A is drawn first."""
    if rng is None:
        rng = realization_rng(ens.seed, 0)
    theta_a = uniform_phases(rng, n_modes)
    theta_b = uniform_phases(rng, n_modes)
    return theta_a, theta_b
