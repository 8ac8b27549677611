from .axis import Axis
from .context import SPEED_OF_LIGHT
from .context import WaveContext
from .field import ComplexField
from .fourier import fourier_modes
from .fourier import integrate
from .fourier import inverse_fourier_modes
from .fourier import wavenumber_axis

__all__ = [
    "SPEED_OF_LIGHT",
    "Axis",
    "ComplexField",
    "WaveContext",
    "fourier_modes",
    "integrate",
    "inverse_fourier_modes",
    "wavenumber_axis",
]
