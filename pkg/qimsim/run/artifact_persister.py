import logging
from pathlib import Path
from typing import Any

import numpy as np

from qimsim.__version__ import APP_NAME
from qimsim.detection import CoincidenceMap
from qimsim.detection import Pattern
from qimsim.exceptions import ArtifactPersistenceError
from qimsim.exceptions import SerializerError
from qimsim.io import CsvTable
from qimsim.io import lookup_serializer
from qimsim.run.steps import RunPatterns

logger = logging.getLogger(__name__)

FORMAT_HEADER = f"{APP_NAME} pattern v1"


def config_comments(
    configuration: dict[str, Any], kind: str = "pattern"
) -> tuple[str, ...]:
    """Version header followed by ``key: value`` lines of the resolved configuration."""
    header = FORMAT_HEADER if kind == "pattern" else f"{APP_NAME} {kind} v1"
    return (header, *(f"{key}: {value}" for key, value in configuration.items()))


PATTERN_COLUMNS = ("x_m", "value")
MAP_COLUMNS = ("x1_m", "x2_m", "value")


def pattern_table(pattern: Pattern, comments: tuple[str, ...]) -> CsvTable:
    rows = np.column_stack([pattern.axis.points(), pattern.values])
    return CsvTable(PATTERN_COLUMNS, rows, comments)


def map_table(cmap: CoincidenceMap, comments: tuple[str, ...]) -> CsvTable:
    x1, x2 = np.meshgrid(cmap.axis1.points(), cmap.axis2.points(), indexing="ij")
    rows = np.column_stack([x1.ravel(), x2.ravel(), cmap.values.ravel()])
    return CsvTable(MAP_COLUMNS, rows, comments)


class ArtifactPersister:
    """Writes the patterns of a run as self-describing CSV files."""

    def persist(
        self,
        patterns: RunPatterns,
        output_path: Path,
        configuration: dict[str, Any],
    ) -> dict[str, str]:
        """
        Writes the main pattern to ``output_path`` and the optional ones beside it.

        Returns:
            Artifact name to written path.
        """
        comments = config_comments(configuration)
        stem = output_path.stem
        tables: dict[str, tuple[Path, CsvTable]] = {
            "coincidence": (
                output_path,
                pattern_table(patterns.coincidence, comments),
            )
        }
        for name in ("singles", "closed_form", "stderr"):
            pattern = getattr(patterns, name)
            if pattern is not None:
                path = output_path.with_name(f"{stem}.{name}.csv")
                tables[name] = (path, pattern_table(pattern, comments))
        if patterns.coincidence_map is not None:
            path = output_path.with_name(f"{stem}.map.csv")
            tables["map"] = (path, map_table(patterns.coincidence_map, comments))

        manifest: dict[str, str] = {}
        for name, (path, table) in tables.items():
            logger.debug(f"Persisting '{name}' to: {path}")
            self._serialize_artifact(table, path)
            manifest[name] = str(path)
            logger.info(f"Persisted '{name}' → {path}")
        return manifest

    def _serialize_artifact(self, data: Any, file_path: Path) -> None:
        serializer = lookup_serializer(file_path)
        if not serializer or not serializer.can_dump:
            raise ArtifactPersistenceError(
                f"No serializer for '{file_path.suffix}' at {file_path}"
            )
        try:
            serializer.dump(data, file_path)
        except SerializerError as e:
            raise ArtifactPersistenceError(
                f"Serialization failed for {file_path}: {e}"
            ) from e
