from __future__ import annotations

import functools
import logging
from pathlib import Path
from typing import Annotated
from typing import Literal

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import PositiveFloat

from qimsim.exceptions import MaskFileError
from qimsim.grid import Axis
from qimsim.grid import ComplexField

logger = logging.getLogger(__name__)

AMPLITUDE_TOLERANCE = 1e-12


class DoubleSlit(BaseModel):
    """Two open slits of width ``a`` whose centres are ``d`` apart."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    shape: Literal["double_slit"] = "double_slit"
    d: PositiveFloat
    a: PositiveFloat
    offset: float = 0.0

    def transmission(self, x: NDArray[np.float64]) -> NDArray[np.complex128]:
        u = np.asarray(x) - self.offset
        half = self.a / 2.0
        is_open = (np.abs(u - self.d / 2.0) < half) | (np.abs(u + self.d / 2.0) < half)
        return is_open.astype(np.complex128)

    @property
    def outer_edge(self) -> float:
        return (self.d + self.a) / 2.0


class SingleSlit(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    shape: Literal["single_slit"] = "single_slit"
    a: PositiveFloat
    offset: float = 0.0

    def transmission(self, x: NDArray[np.float64]) -> NDArray[np.complex128]:
        u = np.asarray(x) - self.offset
        return (np.abs(u) < self.a / 2.0).astype(np.complex128)

    @property
    def outer_edge(self) -> float:
        return self.a / 2.0


class GaussianMask(BaseModel):
    """Soft aperture with amplitude exp(-(x - offset)^2 / (2 w^2))."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    shape: Literal["gaussian"] = "gaussian"
    w: PositiveFloat
    offset: float = 0.0

    def transmission(self, x: NDArray[np.float64]) -> NDArray[np.complex128]:
        u = np.asarray(x) - self.offset
        return np.exp(-(u**2) / (2.0 * self.w**2)).astype(np.complex128)

    @property
    def outer_edge(self) -> float:
        return self.w


class SampledMask(BaseModel):
    """Mask given as samples, linearly interpolated and zero outside its axis."""

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    shape: Literal["sampled"] = "sampled"
    field: ComplexField

    def transmission(self, x: NDArray[np.float64]) -> NDArray[np.complex128]:
        xp = self.field.axis.points()
        values = self.field.samples
        re = np.interp(x, xp, values.real, left=0.0, right=0.0)
        im = np.interp(x, xp, values.imag, left=0.0, right=0.0)
        return re + 1j * im

    @property
    def outer_edge(self) -> float:
        return max(abs(self.field.axis.x_min), abs(self.field.axis.x_max))


class FileMask(BaseModel):
    """Mask read from a two-column text file of (x in meters, amplitude)."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    shape: Literal["file"] = "file"
    path: Path

    def transmission(self, x: NDArray[np.float64]) -> NDArray[np.complex128]:
        return load_mask_file(self.path).transmission(x)

    @property
    def outer_edge(self) -> float:
        return load_mask_file(self.path).outer_edge


MaskProfile = Annotated[
    DoubleSlit | SingleSlit | GaussianMask | SampledMask | FileMask,
    Field(discriminator="shape"),
]


@functools.lru_cache(maxsize=32)
def load_mask_file(path: Path) -> SampledMask:
    """
    Reads a sampled mask from a text file.

    The file holds two whitespace- or comma-separated columns, position in
    meters and real amplitude, on a uniform increasing grid. Lines starting
    with ``#`` are ignored.

    Raises:
        MaskFileError: If the file is unreadable, malformed, non-uniform, or
            holds an amplitude with modulus above one.
    """
    logger.debug(f"Loading mask file: {path}")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise MaskFileError(f"Could not read mask file {path}: {e}") from e

    try:
        data = np.loadtxt(text.replace(",", " ").splitlines(), ndmin=2)
    except ValueError as e:
        raise MaskFileError(f"Malformed mask file {path}: {e}") from e

    if data.shape[1] != 2 or data.shape[0] < 2:
        raise MaskFileError(
            f"Mask file {path} must have two columns and at least two rows, "
            f"got shape {data.shape}."
        )
    x, amplitude = data[:, 0], data[:, 1]
    steps = np.diff(x)
    if np.any(steps <= 0):
        raise MaskFileError(f"Mask file {path} positions must be strictly increasing.")
    if not np.allclose(steps, steps[0], rtol=1e-6):
        raise MaskFileError(f"Mask file {path} positions must be uniformly spaced.")
    if np.any(np.abs(amplitude) > 1.0 + AMPLITUDE_TOLERANCE):
        raise MaskFileError(f"Mask file {path} has amplitudes with modulus above 1.")

    axis = Axis.from_spacing(float(x[0]), float(steps.mean()), x.size)
    return SampledMask(field=ComplexField(axis, amplitude))
