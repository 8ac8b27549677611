"""Midpoint quadrature and the discrete Fourier contract used by propagation.

Synthesis uses the kernel ``exp(+i p x)`` and analysis carries the ``1/(2 pi)``:

    f(x_j) = sum_k c(p_k) exp(i p_k x_j) dp / (2 pi)
    c(p_k) = dx * sum_j f(x_j) exp(-i p_k x_j)

with ``p_k = (k - n // 2) * dp`` and ``dp = 2 pi / (n dx)``, so the ``p = 0``
bin exists for every ``n``.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.typing import NDArray
from scipy import fft as sp_fft

from qimsim.exceptions import InvalidGrid
from qimsim.grid.axis import Axis
from qimsim.grid.field import ComplexField


def integrate(field: ComplexField) -> complex:
    """Midpoint rule: sum of samples times the sample spacing."""
    return complex(np.sum(field.samples) * field.axis.spacing)


def wavenumber_axis(axis: Axis) -> Axis:
    """The DFT wavenumber axis of ``axis``; its midpoints are the DFT frequencies."""
    dp = 2.0 * math.pi / (axis.n * axis.spacing)
    return Axis.from_spacing(-(axis.n // 2) * dp, dp, axis.n)


def forward_coefficients(
    samples: NDArray[np.complex128], axis: Axis
) -> NDArray[np.complex128]:
    """Analysis along the first dimension of ``samples`` (1-D or 2-D)."""
    p = wavenumber_axis(axis).points()
    x0 = axis.x_min + axis.spacing / 2.0
    spectrum = sp_fft.fftshift(sp_fft.fft(samples, axis=0), axes=0)
    phase = np.exp(-1j * p * x0)
    if samples.ndim == 2:
        phase = phase[:, np.newaxis]
    return axis.spacing * phase * spectrum


def inverse_coefficients(
    coefficients: NDArray[np.complex128], axis: Axis
) -> NDArray[np.complex128]:
    """Synthesis back onto ``axis``; exact inverse of :func:`forward_coefficients`."""
    p = wavenumber_axis(axis).points()
    x0 = axis.x_min + axis.spacing / 2.0
    phase = np.exp(1j * p * x0)
    if coefficients.ndim == 2:
        phase = phase[:, np.newaxis]
    shifted = sp_fft.ifftshift(coefficients * phase, axes=0)
    return sp_fft.ifft(shifted, axis=0) / axis.spacing


def fourier_modes(field: ComplexField) -> ComplexField:
    """Decomposes ``field`` into plane-wave coefficients over its wavenumber axis."""
    return ComplexField(
        wavenumber_axis(field.axis), forward_coefficients(field.samples, field.axis)
    )


def inverse_fourier_modes(coefficients: ComplexField, axis: Axis) -> ComplexField:
    """Rebuilds samples on ``axis`` from coefficients produced by :func:`fourier_modes`."""
    if not coefficients.axis.same_as(wavenumber_axis(axis)):
        raise InvalidGrid("Coefficient axis is not the wavenumber axis of the target.")
    return ComplexField(axis, inverse_coefficients(coefficients.samples, axis))


def synthesize(
    coefficients: NDArray[np.complex128], axis: Axis, x: NDArray[np.float64]
) -> NDArray[np.complex128]:
    """Band-limited evaluation of the series at arbitrary positions ``x``."""
    p_axis = wavenumber_axis(axis)
    kernel = np.exp(1j * np.outer(x, p_axis.points())) * (p_axis.spacing / (2 * math.pi))
    return kernel @ coefficients
