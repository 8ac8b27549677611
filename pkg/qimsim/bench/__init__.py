from .loader import BenchLoader
from .loader import apply_override
from .loader import list_presets
from .loader import preset_path
from .parser import parse
from .printer import render
from .schema import BenchModel
from .schema import GridSpec
from .schema import PumpSpec
from .schema import ReferenceSpec
from .schema import SourceKind
from .schema import SourceSpec

__all__ = [
    "BenchLoader",
    "BenchModel",
    "GridSpec",
    "PumpSpec",
    "ReferenceSpec",
    "SourceKind",
    "SourceSpec",
    "apply_override",
    "list_presets",
    "parse",
    "preset_path",
    "render",
]
