from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from dataclasses import field

import numpy as np
from numpy.typing import ArrayLike
from numpy.typing import NDArray

from qimsim.exceptions import DegenerateGeometry
from qimsim.exceptions import ModeAxisMismatch
from qimsim.exceptions import SamplingViolation
from qimsim.grid import Axis
from qimsim.grid import ComplexField
from qimsim.grid import WaveContext
from qimsim.grid.fourier import forward_coefficients
from qimsim.grid.fourier import synthesize
from qimsim.optics.elements import ArmSpec
from qimsim.optics.elements import FreeSpace
from qimsim.optics.elements import GaussianPupil
from qimsim.optics.elements import Mask
from qimsim.optics.elements import PointArray
from qimsim.optics.elements import ThinLens
from qimsim.optics.propagate import apply_element

logger = logging.getLogger(__name__)

DEFAULT_GRID = Axis.centered(2e-3, 1024)
FOCUS_TOLERANCE = 1e-12
FRESNEL_PHASE = cmath.exp(-0.25j * math.pi)


@dataclass(frozen=True, eq=False)
class TransferMatrix:
    """
    Sampled response g[x][p] of an arm to every input plane-wave mode.

    ``base`` holds the propagated entries and ``mode_phase`` extra per-mode
    pure phases. :meth:`intensity` never reads ``mode_phase``.
    """

    out_axis: Axis
    mode_axis: Axis
    base: NDArray[np.complex128]
    mode_phase: NDArray[np.float64] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        base = np.asarray(self.base, dtype=np.complex128)
        if base.shape != (self.out_axis.n, self.mode_axis.n):
            raise ModeAxisMismatch(
                f"Transfer entries have shape {base.shape}, expected "
                f"({self.out_axis.n}, {self.mode_axis.n})."
            )
        if not np.all(np.isfinite(base)):
            raise SamplingViolation("Transfer matrix has non-finite entries.")
        phase = (
            np.zeros(self.mode_axis.n)
            if self.mode_phase is None
            else np.asarray(self.mode_phase, dtype=np.float64)
        )
        if phase.shape != (self.mode_axis.n,):
            raise ModeAxisMismatch("Mode phases must match the mode axis.")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "mode_phase", phase)

    @property
    def entries(self) -> NDArray[np.complex128]:
        return self.base * np.exp(1j * self.mode_phase)[np.newaxis, :]

    def intensity(self) -> NDArray[np.float64]:
        return np.abs(self.base) ** 2

    def with_mode_phases(self, theta: ArrayLike) -> TransferMatrix:
        """Same arm with every column multiplied by exp(i theta[p])."""
        return TransferMatrix(
            self.out_axis, self.mode_axis, self.base, self.mode_phase + np.asarray(theta)
        )

    def column(self, index: int) -> ComplexField:
        return ComplexField(self.out_axis, self.entries[:, index])


@dataclass(frozen=True, eq=False)
class ChirpModes:
    """
    Every input mode in the closed form exp(c + i b x + i a x^2).

    ``a`` is shared by all modes; ``b`` and ``c`` are per mode. Free space,
    thin lenses and Gaussian pupils map this form onto itself. The common
    propagation phase k d stays in ``carrier``, outside the per-sample exponent.
    """

    a: complex
    b: NDArray[np.complex128]
    c: NDArray[np.complex128]
    carrier: float = 0.0

    @classmethod
    def plane_waves(cls, p: NDArray[np.float64]) -> ChirpModes:
        return cls(0j, p.astype(np.complex128), np.zeros(p.size, dtype=np.complex128))

    def free_space(self, d: float, k: float) -> ChirpModes:
        s = k / (2.0 * d)
        den = self.a + s
        if abs(den) <= FOCUS_TOLERANCE * max(abs(self.a), s):
            raise DegenerateGeometry(
                f"Modes focus to a point after {d} m of free space; "
                f"add a pupil or a mask before this plane."
            )
        prefactor = FRESNEL_PHASE * cmath.sqrt(1j * s / den)
        c = self.c + cmath.log(prefactor) - 1j * self.b**2 / (4.0 * den)
        return ChirpModes(self.a * s / den, self.b * s / den, c, self.carrier + k * d)

    def lens(self, f: float, k: float) -> ChirpModes:
        return ChirpModes(self.a - k / (2.0 * f), self.b, self.c, self.carrier)

    def pupil(self, area: float) -> ChirpModes:
        return ChirpModes(self.a + 1j / (2.0 * area), self.b, self.c, self.carrier)

    def evaluate(self, x: NDArray[np.float64]) -> NDArray[np.complex128]:
        """Samples of shape (len(x), modes); the exponent is summed before exp."""
        xc = x[:, np.newaxis]
        exponent = self.c[np.newaxis, :] + 1j * self.b[np.newaxis, :] * xc
        exponent = exponent + 1j * self.a * xc**2
        return np.exp(exponent) * cmath.exp(1j * self.carrier)

    def max_phase_step(self, axis: Axis) -> float:
        """Largest local wavenumber times the spacing over the axis and all modes."""
        x = axis.points()
        slope = 2.0 * self.a.real * np.array([x[0], x[-1]])
        b = self.b.real
        reach = np.maximum(np.abs(b.max() + slope), np.abs(b.min() + slope))
        return float(np.max(reach) * axis.spacing)


def sample_modes(modes: ChirpModes, axis: Axis) -> NDArray[np.complex128]:
    step = modes.max_phase_step(axis)
    if step > math.pi:
        raise SamplingViolation(
            f"Modes oscillate faster than the grid resolves: phase step "
            f"{step:.3g} rad exceeds pi (spacing {axis.spacing:.3g} m)."
        )
    return modes.evaluate(axis.points())


def arm_transfer(
    arm: ArmSpec,
    ctx: WaveContext,
    mode_axis: Axis,
    grid: Axis | None = None,
) -> TransferMatrix:
    """
    Transfer matrix of ``arm`` for plane-wave inputs exp(i p x), p on ``mode_axis``.

    Modes travel in closed form until the first mask, where they are sampled on
    ``grid``; later elements act on the samples. Point arrays are read out at
    their own positions, buckets and far-field points keep the full grid.

    Raises:
        SamplingViolation: If a phase would alias on ``grid``.
        DegenerateGeometry: If the modes focus to a point before any mask.
    """
    grid = grid or DEFAULT_GRID
    modes = ChirpModes.plane_waves(mode_axis.points())
    samples: NDArray[np.complex128] | None = None

    for elem in arm.elements:
        if samples is not None:
            samples = apply_element(samples, grid, elem, ctx)
            continue
        match elem:
            case FreeSpace(d=d):
                modes = modes.free_space(d, ctx.k)
            case ThinLens(f=f):
                modes = modes.lens(f, ctx.k)
            case GaussianPupil(A=area):
                modes = modes.pupil(area)
            case Mask():
                logger.debug(f"Sampling {mode_axis.n} modes on {grid.n} grid points")
                samples = apply_element(sample_modes(modes, grid), grid, elem, ctx)

    detector = arm.detector
    if isinstance(detector, PointArray):
        out_axis = detector.axis
        if samples is None:
            base = modes.evaluate(out_axis.points())
        else:
            coefficients = forward_coefficients(samples, grid)
            base = synthesize(coefficients, grid, out_axis.points())
    else:
        out_axis = grid
        base = sample_modes(modes, grid) if samples is None else samples

    logger.debug(
        f"Transfer matrix {base.shape[0]}x{base.shape[1]} for detector {detector.kind}"
    )
    return TransferMatrix(out_axis, mode_axis, base)
