"""Closed-form transfer functions for the standard geometries.

These are written in the 1-D unitary convention used by :func:`arm_transfer`,
so on their own geometries the two agree up to quadrature error. They serve as
independent oracles for the numerical composition.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from numpy.typing import ArrayLike
from numpy.typing import NDArray

from qimsim.exceptions import DegenerateGeometry
from qimsim.grid import Axis
from qimsim.grid import WaveContext
from qimsim.optics.masks import MaskProfile
from qimsim.optics.propagate import quadratic_phase
from qimsim.optics.transfer import DEFAULT_GRID
from qimsim.optics.transfer import FRESNEL_PHASE

FOCAL_REGIME_FRACTION = 0.5


def imaging_defocus(d1: float, d2: float, d1p: float, focal_length: float) -> float:
    """Two-photon imaging condition; zero when the ghost image is in focus."""
    return 1.0 / (d1 + d2) + 1.0 / d1p - 1.0 / focal_length


def ghost_magnification(d1: float, d2: float, d1p: float) -> float:
    """Image coordinate per object coordinate of the two-photon image."""
    return -(d1 + d2) / d1p


def analytic_gB(ctx: WaveContext, d: float, x: ArrayLike, p: ArrayLike) -> NDArray:  # noqa: N802
    """Plane wave exp(i p x) after free space ``d``, in the paraxial approximation."""
    x, p = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(p, dtype=float))
    return np.exp(1j * ctx.k * d) * np.exp(1j * p * x) * quadratic_phase(p, -d / ctx.k)


def analytic_gA_image(  # noqa: N802
    ctx: WaveContext,
    d1: float,
    f: float,
    d1p: float,
    mask: MaskProfile,
    x: ArrayLike,
    p: ArrayLike,
) -> NDArray[np.complex128]:
    """
    Field behind the object of the imaging arm for input mode ``p`` at ``x``.

    The arm is free space ``d1``, a thin lens ``f``, free space ``d1p`` and the
    object ``mask``. Integrating over ``x`` gives the amplitude-level bucket
    signal, see :func:`analytic_gA_image_integrated`.

    Raises:
        DegenerateGeometry: If ``f`` equals ``d1p``.
    """
    if abs(f - d1p) <= 1e-12 * abs(f):
        raise DegenerateGeometry(
            f"Object plane d1'={d1p} m sits in the focal plane f={f} m."
        )
    k = ctx.k
    ratio = f / (f - d1p)
    big_d = d1 + d1p * ratio
    x, p = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(p, dtype=float))
    prefactor = FRESNEL_PHASE * cmath.sqrt(1j * ratio) * cmath.exp(1j * k * (d1 + d1p))
    return (
        prefactor
        * quadratic_phase(p, -big_d / k)
        * np.exp(1j * p * x * ratio)
        * quadratic_phase(x, -k / (f - d1p))
        * mask.transmission(x)
    )


def analytic_gA_image_integrated(
    ctx: WaveContext,
    d1: float,
    f: float,
    d1p: float,
    mask: MaskProfile,
    p: ArrayLike,
    grid: Axis = DEFAULT_GRID,
) -> NDArray[np.complex128]:
    """Midpoint quadrature of :func:`analytic_gA_image` over the object plane."""
    p = np.atleast_1d(np.asarray(p, dtype=float))
    x = grid.points()
    values = analytic_gA_image(ctx, d1, f, d1p, mask, x[:, np.newaxis], p[np.newaxis, :])
    return values.sum(axis=0) * grid.spacing


def analytic_gA_ghost(  # noqa: N802
    ctx: WaveContext,
    d1: float,
    d1p: float,
    mask: MaskProfile,
    p: ArrayLike,
    grid: Axis = DEFAULT_GRID,
) -> NDArray[np.complex128]:
    """
    On-axis amplitude a distance ``d1p`` behind the object of the interference arm.

    The object integral is done by midpoint quadrature on ``grid``.
    """
    if d1 <= 0 or d1p <= 0:
        raise DegenerateGeometry(f"Distances must be positive: d1={d1}, d1'={d1p}.")
    k = ctx.k
    p = np.atleast_1d(np.asarray(p, dtype=float))
    x = grid.points()
    kernel = quadratic_phase(x, k / d1p) * mask.transmission(x)
    integral = (kernel[:, np.newaxis] * np.exp(1j * np.outer(x, p))).sum(axis=0)
    prefactor = FRESNEL_PHASE * math.sqrt(k / (2 * math.pi * d1p))
    return (
        prefactor
        * cmath.exp(1j * k * (d1 + d1p))
        * quadratic_phase(p, -d1 / k)
        * integral
        * grid.spacing
    )


def analytic_gB_focal(  # noqa: N802
    ctx: WaveContext, f2: float, A: float, x2: ArrayLike, p: ArrayLike  # noqa: N803
) -> NDArray[np.float64]:
    """|g_B|^2 behind a Gaussian-pupil lens, detector in its focal plane."""
    if f2 <= 0 or A <= 0:
        raise DegenerateGeometry(f"Focal length and pupil must be positive: {f2}, {A}.")
    k = ctx.k
    x2, p = np.broadcast_arrays(np.asarray(x2, dtype=float), np.asarray(p, dtype=float))
    return (k / f2) * A**2 * np.exp(-((p - k * x2 / f2) ** 2) * A)


def focal_delta_regime(A: float, mode_axis: Axis) -> bool:  # noqa: N803
    """True when the focal Gaussian in p is narrower than the mode spacing scale."""
    return 1.0 / math.sqrt(2.0 * A) <= FOCAL_REGIME_FRACTION * mode_axis.spacing
