from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from qimsim.bench.parser import LENS_MESSAGE
from qimsim.bench.parser import parse
from qimsim.bench.schema import BenchModel
from qimsim.exceptions import BenchLoaderError
from qimsim.exceptions import SerializerError
from qimsim.io import lookup_serializer
from qimsim.locations import PRESETS_DIR

logger = logging.getLogger(__name__)

BENCH_SUFFIX = ".bench"
NULL_VALUES = {"none", "null"}


def list_presets() -> list[str]:
    return sorted(p.stem for p in PRESETS_DIR.glob(f"*{BENCH_SUFFIX}"))


def preset_path(name: str) -> Path:
    stem = name.removesuffix(BENCH_SUFFIX)
    path = PRESETS_DIR / f"{stem}{BENCH_SUFFIX}"
    if not path.is_file():
        raise BenchLoaderError(
            f"Unknown preset '{name}'. Available: {', '.join(list_presets())}"
        )
    return path


class BenchLoader:
    """Loads bench files by path or preset name."""

    def __init__(self, allow_diverging: bool = False) -> None:
        self.allow_diverging = allow_diverging

    def from_path(self, file_path: Path) -> BenchModel:
        logger.info(f"Loading bench from: {file_path}")
        if not file_path.is_file():
            raise BenchLoaderError(f"File not found: {file_path}")
        try:
            text = lookup_serializer(BENCH_SUFFIX).load(file_path)
        except (OSError, SerializerError) as e:
            raise BenchLoaderError(f"Error reading bench file {file_path}: {e}") from e
        return self.from_text(text, file_path.parent)

    def from_text(self, text: str, base_dir: Path | None = None) -> BenchModel:
        return parse(text, base_dir=base_dir, allow_diverging=self.allow_diverging)

    def from_preset(self, name: str) -> BenchModel:
        return self.from_path(preset_path(name))

    def load(self, reference: str | Path) -> BenchModel:
        """A bench file path, or a preset name when no such file exists."""
        path = Path(reference)
        if path.is_file():
            return self.from_path(path)
        if path.stem in list_presets() and path.parent == Path():
            return self.from_preset(path.stem)
        raise BenchLoaderError(
            f"'{reference}' is neither a bench file nor a preset "
            f"({', '.join(list_presets())})"
        )


def _thaw(node: Any) -> Any:
    match node:
        case dict():
            return {k: _thaw(v) for k, v in node.items()}
        case list() | tuple():
            return [_thaw(v) for v in node]
        case _:
            return node


def apply_override(
    model: BenchModel, dotted_path: str, value: Any, allow_diverging: bool = False
) -> BenchModel:
    """
    Copy of ``model`` with the field at ``dotted_path`` replaced and re-validated.

    Path segments are field names or element indices, e.g.
    ``arm_b.elements.0.d`` or ``grid.n``. String values are coerced by the
    schema; ``none`` or ``null`` clears an optional field.

    Raises:
        BenchLoaderError: If the path does not exist or the value is invalid.
    """
    if isinstance(value, str) and value.lower() in NULL_VALUES:
        value = None
    data = _thaw(model.model_dump())
    *parents, last = dotted_path.split(".")
    node = data
    try:
        for segment in parents:
            node = node[int(segment)] if isinstance(node, list) else node[segment]
        if isinstance(node, list):
            node[int(last)] = value
        elif last in node:
            node[last] = value
        else:
            raise KeyError(last)
    except (KeyError, IndexError, ValueError, TypeError) as e:
        raise BenchLoaderError(f"No bench field at '{dotted_path}'") from e

    try:
        updated = BenchModel.model_validate(data)
    except ValidationError as e:
        raise BenchLoaderError(f"Invalid override {dotted_path}={value!r}: {e}") from e
    if updated.diverging_lenses() and not allow_diverging:
        raise BenchLoaderError(LENS_MESSAGE)
    logger.debug(f"Override {dotted_path}={value!r}")
    return updated
