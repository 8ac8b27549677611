"""Element actions on sampled fields.

Free space is applied in the wavenumber domain, thin lenses, masks and pupils
act pointwise. Every quadratic phase is checked against the grid before it is
applied; a configuration that would alias raises instead of returning noise.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable

import numpy as np
from numpy.typing import ArrayLike
from numpy.typing import NDArray

from qimsim.exceptions import SamplingViolation
from qimsim.grid import Axis
from qimsim.grid import ComplexField
from qimsim.grid import WaveContext
from qimsim.grid import wavenumber_axis
from qimsim.grid.fourier import forward_coefficients
from qimsim.grid.fourier import inverse_coefficients
from qimsim.optics.elements import Element
from qimsim.optics.elements import FreeSpace
from qimsim.optics.elements import GaussianPupil
from qimsim.optics.elements import Mask
from qimsim.optics.elements import ThinLens

logger = logging.getLogger(__name__)


def quadratic_phase(x: ArrayLike, q: float) -> complex | NDArray[np.complex128]:
    """exp(i q x^2 / 2); scalar in, scalar out."""
    value = np.exp(0.5j * q * np.square(x))
    if np.ndim(value) == 0:
        return complex(value)
    return value


def max_chirp_step(q: float, axis: Axis) -> float:
    """Largest phase change of exp(i q x^2 / 2) between adjacent samples."""
    x = axis.points()
    return 0.5 * abs(q) * axis.spacing * float(np.max(np.abs(x[1:] + x[:-1])))


def check_chirp_sampling(q: float, axis: Axis, what: str) -> None:
    step = max_chirp_step(q, axis)
    if step > math.pi:
        raise SamplingViolation(
            f"{what} aliases on the grid: phase step {step:.3g} rad exceeds pi "
            f"(spacing {axis.spacing:.3g} m, {axis.n} samples)."
        )


def free_space_transfer(axis: Axis, d: float, ctx: WaveContext) -> NDArray[np.complex128]:
    """Per-bin multiplier exp(i k d) exp(-i d p^2 / (2 k)) on the wavenumber axis."""
    p_axis = wavenumber_axis(axis)
    check_chirp_sampling(-d / ctx.k, p_axis, f"Free space d={d} m")
    p = p_axis.points()
    return np.exp(1j * ctx.k * d) * np.exp(-0.5j * d * p**2 / ctx.k)


def apply_element(
    samples: NDArray[np.complex128], axis: Axis, elem: Element, ctx: WaveContext
) -> NDArray[np.complex128]:
    """Applies ``elem`` along the first dimension of ``samples`` (1-D or 2-D)."""
    column = (slice(None), np.newaxis) if samples.ndim == 2 else (slice(None),)
    match elem:
        case FreeSpace(d=d):
            logger.debug(f"Free space d={d} on {axis.n} samples")
            transfer = free_space_transfer(axis, d, ctx)
            coefficients = forward_coefficients(samples, axis)
            return inverse_coefficients(coefficients * transfer[column], axis)
        case ThinLens(f=f):
            q = -ctx.k / f
            check_chirp_sampling(q, axis, f"Thin lens f={f} m")
            logger.debug(f"Thin lens f={f} on {axis.n} samples")
            return samples * quadratic_phase(axis.points(), q)[column]
        case Mask(profile=profile):
            logger.debug(f"Mask {profile.shape} on {axis.n} samples")
            return samples * profile.transmission(axis.points())[column]
        case GaussianPupil(A=area):
            x = axis.points()
            return samples * np.exp(-(x**2) / (2.0 * area))[column]
        case _:
            raise TypeError(f"Unsupported element: {elem!r}")


def propagate(field: ComplexField, elem: Element, ctx: WaveContext) -> ComplexField:
    """Field after passing through a single element."""
    return ComplexField(field.axis, apply_element(field.samples, field.axis, elem, ctx))


def propagate_through(
    field: ComplexField, elements: Iterable[Element], ctx: WaveContext
) -> ComplexField:
    for elem in elements:
        field = propagate(field, elem, ctx)
    return field
