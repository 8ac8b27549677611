import math

import numpy as np
import pytest

from qimsim.grid import Axis
from qimsim.grid import ComplexField
from qimsim.grid import fourier_modes
from qimsim.grid import integrate
from qimsim.grid import inverse_fourier_modes
from qimsim.grid import wavenumber_axis
from qimsim.grid.fourier import synthesize


def test_integrate_constant_is_exact() -> None:
    field = ComplexField.constant(Axis(0.0, 1.0, 100))
    assert integrate(field) == pytest.approx(1.0, abs=1e-15)


def test_integrate_odd_function_vanishes() -> None:
    field = ComplexField.from_function(Axis(-1.0, 1.0, 200), lambda x: x)
    assert abs(integrate(field)) <= 1e-14


def test_integrate_full_period_of_oscillation_vanishes() -> None:
    field = ComplexField.from_function(Axis(0.0, 2.0, 256), lambda x: np.exp(1j * np.pi * x))
    assert abs(integrate(field)) <= 1e-12


@pytest.mark.parametrize("n", [63, 64], ids=["odd", "even"])
def test_wavenumber_axis_has_zero_bin(n: int) -> None:
    axis = Axis.centered(1e-3, n)
    p_axis = wavenumber_axis(axis)
    assert p_axis.n == n
    assert p_axis.spacing == pytest.approx(2 * math.pi / axis.extent, rel=1e-12)
    assert abs(p_axis.points()[n // 2]) <= 1e-9 * p_axis.spacing


@pytest.mark.parametrize("n", [63, 64], ids=["odd", "even"])
def test_zero_wavenumber_coefficient_equals_integral(n: int) -> None:
    rng = np.random.default_rng(5)
    axis = Axis(-0.3, 0.7, n)
    field = ComplexField(axis, rng.standard_normal(n) + 1j * rng.standard_normal(n))
    coefficients = fourier_modes(field)
    assert coefficients.samples[n // 2] == pytest.approx(integrate(field), rel=1e-12)


def test_pure_mode_is_a_single_bin() -> None:
    axis = Axis.centered(1e-3, 128)
    p_axis = wavenumber_axis(axis)
    p0 = p_axis.points()[64 + 5]
    field = ComplexField.from_function(axis, lambda x: np.exp(1j * p0 * x))

    magnitudes = np.abs(fourier_modes(field).samples)

    peak = int(np.argmax(magnitudes))
    assert peak == 64 + 5
    others = np.delete(magnitudes, peak)
    assert np.all(others <= 1e-10 * magnitudes[peak])


def test_gaussian_transforms_to_gaussian_of_inverse_width() -> None:
    w = 1.0
    axis = Axis.centered(20.0, 256)
    field = ComplexField.from_function(axis, lambda x: np.exp(-(x**2) / (2 * w**2)))

    coefficients = fourier_modes(field)
    p = coefficients.axis.points()
    expected = w * math.sqrt(2 * math.pi) * np.exp(-(p**2) * w**2 / 2)

    np.testing.assert_allclose(coefficients.samples, expected, atol=1e-10)
    centre = 128
    np.testing.assert_allclose(
        coefficients.samples[centre + 1 : centre + 40],
        coefficients.samples[centre - 1 : centre - 40 : -1],
        atol=1e-12,
    )


def test_round_trip_restores_samples() -> None:
    rng = np.random.default_rng(0)
    axis = Axis(-1e-3, 2e-3, 300)
    field = ComplexField(axis, rng.standard_normal(300) + 1j * rng.standard_normal(300))

    restored = inverse_fourier_modes(fourier_modes(field), axis)

    error = np.linalg.norm(restored.samples - field.samples) / np.linalg.norm(field.samples)
    assert error <= 1e-12


def test_synthesis_at_grid_points_matches_samples() -> None:
    rng = np.random.default_rng(1)
    axis = Axis.centered(1.0, 64)
    samples = rng.standard_normal(64) + 1j * rng.standard_normal(64)
    coefficients = fourier_modes(ComplexField(axis, samples)).samples

    np.testing.assert_allclose(synthesize(coefficients, axis, axis.points()), samples, atol=1e-12)
