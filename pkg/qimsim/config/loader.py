import logging
from pathlib import Path
from typing import Any

import toml

from qimsim.exceptions import ConfigLoaderError
from qimsim.locations import project_root

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE_NAME = "pyproject.toml"
DEFAULT_QIMSIM_CONFIG_KEY = "tool.qimsim"


def load_qimsim_toml(
    config_file_path: Path | None = None,
    qimsim_config_key: str = DEFAULT_QIMSIM_CONFIG_KEY,
) -> dict[str, Any]:
    """
    Loads the qimsim table from a TOML file, typically pyproject.toml.

    Args:
        config_file_path: Optional path to the TOML file. Defaults to
            ``pyproject.toml`` in the project root.
        qimsim_config_key: Dot-separated key of the qimsim table.

    Returns:
        The qimsim configuration, or an empty dict if the file or table is absent.

    Raises:
        ConfigLoaderError: If the file cannot be read or the TOML is malformed.
    """
    if config_file_path is None:
        config_file_path = project_root() / DEFAULT_CONFIG_FILE_NAME

    logger.debug(
        f"Loading qimsim configuration from {config_file_path} "
        f"under key '{qimsim_config_key}'"
    )

    if not config_file_path.exists():
        logger.debug(f"Configuration file not found: {config_file_path}; using defaults.")
        return {}

    try:
        data = toml.load(config_file_path)
    except toml.TomlDecodeError as e:
        raise ConfigLoaderError(
            f"Error decoding TOML file {config_file_path}: {e}"
        ) from e
    except OSError as e:
        raise ConfigLoaderError(
            f"Could not read configuration file {config_file_path}: {e}"
        ) from e

    table: Any = data
    for key in qimsim_config_key.split("."):
        table = table.get(key, {}) if isinstance(table, dict) else {}

    if not isinstance(table, dict):
        logger.warning(
            f"Expected a table at '{qimsim_config_key}' in {config_file_path}, "
            f"found {type(table).__name__}; using defaults."
        )
        return {}

    logger.debug(f"Loaded qimsim configuration from {config_file_path}")
    return table
