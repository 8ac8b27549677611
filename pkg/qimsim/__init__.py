"""qimsim - coincidence imaging and separability simulation at desk scale."""

from qimsim.__version__ import __version__
from qimsim.bench import BenchLoader
from qimsim.bench import BenchModel
from qimsim.run import BenchRunCoordinator
from qimsim.run import RunConfig
from qimsim.run import Status
from qimsim.run import Summary

__all__ = [
    "BenchLoader",
    "BenchModel",
    "BenchRunCoordinator",
    "RunConfig",
    "Status",
    "Summary",
    "__version__",
]
