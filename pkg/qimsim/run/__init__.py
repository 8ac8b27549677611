from .coordinator import BenchRunCoordinator
from .coordinator import run_config_from_options
from .run_config import RunConfig
from .steps import RunPatterns
from .summary_model import Status
from .summary_model import Summary

__all__ = [
    "BenchRunCoordinator",
    "RunConfig",
    "RunPatterns",
    "Status",
    "Summary",
    "run_config_from_options",
]
