from .filters import QUIET_OPTICS_FILTER
from .filters import QuietOpticsFilter

__all__ = ["QUIET_OPTICS_FILTER", "QuietOpticsFilter"]
