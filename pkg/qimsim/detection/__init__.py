from .amplitude import AmplitudeMap
from .amplitude import biphoton_amplitude
from .amplitude import coincidence_pattern
from .amplitude import singles_pattern
from .classical import classical_coincidence
from .classical import classical_coincidence_map
from .klyshko import KlyshkoResult
from .klyshko import klyshko_closed_form
from .klyshko import klyshko_mc
from .metrics import fringe_spacing
from .metrics import image_centroid
from .metrics import image_error
from .metrics import measure_magnification
from .metrics import rms_deviation
from .metrics import visibility
from .patterns import CoincidenceMap
from .patterns import Pattern
from .patterns import reference_pattern

__all__ = [
    "AmplitudeMap",
    "CoincidenceMap",
    "KlyshkoResult",
    "Pattern",
    "biphoton_amplitude",
    "classical_coincidence",
    "classical_coincidence_map",
    "coincidence_pattern",
    "fringe_spacing",
    "image_centroid",
    "image_error",
    "klyshko_closed_form",
    "klyshko_mc",
    "measure_magnification",
    "reference_pattern",
    "rms_deviation",
    "singles_pattern",
    "visibility",
]
