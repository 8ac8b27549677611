"""
qimsim configuration loading.

Project defaults come from the ``[tool.qimsim]`` table of ``pyproject.toml``.
"""

from qimsim.config.loader import load_qimsim_toml
from qimsim.config.settings import QimsimSettings
from qimsim.config.settings import load_settings

__all__ = [
    "QimsimSettings",
    "load_qimsim_toml",
    "load_settings",
]
