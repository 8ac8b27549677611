from __future__ import annotations

import json
from collections.abc import Callable
from dataclasses import dataclass
from dataclasses import field
from pathlib import Path
from typing import Any

import numpy as np
import yaml
from numpy.typing import NDArray

from qimsim.exceptions import SerializerError

type DumperFuncType = Callable[..., None]
type LoaderFuncType = Callable[..., Any]

CSV_FLOAT_FORMAT = "%.17g"


@dataclass(frozen=True, eq=False)
class CsvTable:
    """Numeric columns preceded by ``#`` comment lines and a header row."""

    columns: tuple[str, ...]
    rows: NDArray[np.float64]
    comments: tuple[str, ...] = field(default=())

    def column(self, name: str) -> NDArray[np.float64]:
        return self.rows[:, self.columns.index(name)]


def _serialize_json(data: Any, path: Path, **kwargs) -> None:  # noqa: ANN003
    options = {"indent": 2, "default": str, **kwargs}
    with path.open("w", encoding="utf-8") as f:
        json.dump(data, f, **options)


def _deserialize_json(path: Path, **kwargs) -> Any:  # noqa: ANN003
    with path.open("r", encoding="utf-8") as f:
        return json.load(f, **kwargs)


def _serialize_text(data: Any, path: Path, **kwargs) -> None:  # noqa: ANN003, ARG001
    with path.open("w", encoding="utf-8") as f:
        f.write(str(data))


def _deserialize_text(path: Path, **kwargs) -> str:  # noqa: ANN003, ARG001
    with path.open("r", encoding="utf-8") as f:
        return f.read()


def _serialize_yaml(data: Any, path: Path, **kwargs) -> None:  # noqa: ANN003
    options = {"indent": 2, "sort_keys": False, "allow_unicode": True, **kwargs}
    with path.open("w", encoding="utf-8") as f:
        yaml.safe_dump(data, f, **options)


def _deserialize_yaml(path: Path, **kwargs) -> Any:  # noqa: ANN003, ARG001
    with path.open("r", encoding="utf-8") as f:
        return yaml.safe_load(f)


def _serialize_csv(table: CsvTable, path: Path, **kwargs) -> None:  # noqa: ANN003, ARG001
    if not isinstance(table, CsvTable):
        raise TypeError(f"CSV serializer expects a CsvTable, got {type(table).__name__}")
    header = "\n".join([*(f"# {c}" for c in table.comments), ",".join(table.columns)])
    rows = np.atleast_2d(np.asarray(table.rows, dtype=np.float64))
    with path.open("w", encoding="utf-8", newline="\n") as f:
        np.savetxt(f, rows, fmt=CSV_FLOAT_FORMAT, delimiter=",", header=header, comments="")


def _deserialize_csv(path: Path, **kwargs) -> CsvTable:  # noqa: ANN003, ARG001
    lines = path.read_text(encoding="utf-8").splitlines()
    comments = [line.removeprefix("#").strip() for line in lines if line.startswith("#")]
    body = [line for line in lines if line and not line.startswith("#")]
    if not body:
        raise ValueError("CSV has no header row")
    columns = tuple(body[0].split(","))
    rows = np.loadtxt(body[1:], delimiter=",", ndmin=2)
    return CsvTable(columns, rows.reshape(-1, len(columns)), tuple(comments))


class Serializer:
    """A consistent interface for dumping and loading data for a specific format."""

    def __init__(
        self,
        name: str,
        dumper: DumperFuncType | None,
        loader: LoaderFuncType | None,
        default_extension: str,
    ) -> None:
        self._name = name
        self._dumper = dumper
        self._loader = loader
        self.default_extension = default_extension

    def dump(self, data: Any, path: Path, **kwargs) -> None:  # noqa: ANN003
        """Serializes and writes data to the given path."""
        if not self.can_dump:
            raise SerializerError(
                f"Serializer '{self._name}' does not support dumping (suffix: {path.suffix})."
            )
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            self._dumper(data, path, **kwargs)  # type: ignore[misc]
        except Exception as e:
            raise SerializerError(
                f"Error dumping data to {path} using {self._name} serializer: {e}"
            ) from e

    def load(self, path: Path, **kwargs) -> Any:  # noqa: ANN003
        """Loads and deserializes data from the given path."""
        if not self.can_load:
            raise SerializerError(
                f"Serializer '{self._name}' does not support loading (suffix: {path.suffix})."
            )
        try:
            return self._loader(path, **kwargs)  # type: ignore[misc]
        except FileNotFoundError:
            raise
        except Exception as e:
            raise SerializerError(
                f"Error loading data from {path} using {self.name} serializer: {e}"
            ) from e

    @property
    def name(self) -> str:
        return self._name

    @property
    def can_dump(self) -> bool:
        return self._dumper is not None

    @property
    def can_load(self) -> bool:
        return self._loader is not None


_JSON = Serializer("json", _serialize_json, _deserialize_json, ".json")
_YAML = Serializer("yaml", _serialize_yaml, _deserialize_yaml, ".yaml")
_TEXT = Serializer("text", _serialize_text, _deserialize_text, ".txt")

_SERIALIZER_REGISTRY: dict[str, Serializer] = {
    ".json": _JSON,
    ".yaml": _YAML,
    ".yml": _YAML,
    ".csv": Serializer("csv", _serialize_csv, _deserialize_csv, ".csv"),
    ".txt": _TEXT,
    ".bench": _TEXT,
}


def lookup_serializer(key: str | Path) -> Serializer | None:
    """
    Serializer for a file path or suffix.

    Args:
        key: A Path, or a suffix string such as ".json" or "csv".

    Returns:
        The registered Serializer, or None for an unknown suffix.
    """
    if isinstance(key, Path):
        suffix = key.suffix.lower()
    elif isinstance(key, str):
        suffix = key.lower()
        if not suffix.startswith("."):
            suffix = "." + suffix
    else:
        raise TypeError("lookup_serializer key must be a Path or string suffix.")

    return _SERIALIZER_REGISTRY.get(suffix)
