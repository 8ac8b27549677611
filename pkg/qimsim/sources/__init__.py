from .biphoton import BiphotonSource
from .biphoton import SpectralAmplitude
from .biphoton import spdc_mode_weights
from .classical import ClassicalEnsemble
from .profiles import ModeProfile
from .profiles import partner_indices
from .profiles import profile_amplitudes
from .random_phase import RandomPhaseEnsemble
from .random_phase import draw_realization
from .rng import realization_rng

SourceModel = BiphotonSource | ClassicalEnsemble | RandomPhaseEnsemble

__all__ = [
    "BiphotonSource",
    "ClassicalEnsemble",
    "ModeProfile",
    "RandomPhaseEnsemble",
    "SourceModel",
    "SpectralAmplitude",
    "draw_realization",
    "partner_indices",
    "profile_amplitudes",
    "realization_rng",
    "spdc_mode_weights",
]
