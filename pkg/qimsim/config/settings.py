from __future__ import annotations

import logging
from pathlib import Path
from typing import Literal

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import NonNegativeInt
from pydantic import PositiveInt
from pydantic import ValidationError

from qimsim.config.loader import load_qimsim_toml
from qimsim.exceptions import ConfigLoaderError
from qimsim.optics import BucketMode

logger = logging.getLogger(__name__)


class QimsimSettings(BaseModel):
    """Project defaults from ``[tool.qimsim]``; bench files and flags override them."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    output_directory: Path = Path(".")
    seed: NonNegativeInt = 0
    realizations: PositiveInt = 1000
    bucket: BucketMode = BucketMode.INTENSITY
    allow_diverging: bool = False
    raw: bool = False
    summary_format: Literal["json", "yaml"] = "json"


def load_settings(config_file_path: Path | None = None) -> QimsimSettings:
    """
    Raises:
        ConfigLoaderError: If the table is malformed or holds unknown keys.
    """
    data = load_qimsim_toml(config_file_path)
    try:
        return QimsimSettings.model_validate(data)
    except ValidationError as e:
        raise ConfigLoaderError(f"Invalid [tool.qimsim] settings: {e}") from e
