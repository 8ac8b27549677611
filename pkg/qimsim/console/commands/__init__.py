from .presets import presets
from .run import run
from .witness import witness

__all__ = ["presets", "run", "witness"]
