from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from qimsim.exceptions import InvalidDistribution
from qimsim.grid import Axis
from qimsim.sources.profiles import ModeProfile
from qimsim.sources.profiles import partner_indices
from qimsim.sources.profiles import profile_amplitudes


@dataclass(frozen=True)
class ClassicalEnsemble:
    """Classically correlated ensemble pairing mode p' in B with p = epsilon p' in A."""

    epsilon: float = 1.0
    profile: ModeProfile = ModeProfile.FLAT
    sigma: float | None = None

    def __post_init__(self) -> None:
        if self.epsilon == 0 or not np.isfinite(self.epsilon):
            raise InvalidDistribution("Pairing scale epsilon must be nonzero and finite.")

    def weights(self, mode_axis: Axis) -> NDArray[np.float64]:
        """Probability weights over the modes; nonnegative and summing to one."""
        f = profile_amplitudes(self.profile, mode_axis, self.sigma)
        return f**2 * mode_axis.spacing

    def partners(self, mode_axis: Axis) -> NDArray[np.int64]:
        return partner_indices(mode_axis, self.epsilon)
