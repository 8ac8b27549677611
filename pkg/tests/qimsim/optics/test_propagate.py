import numpy as np
import pytest

from qimsim.exceptions import SamplingViolation
from qimsim.grid import Axis
from qimsim.grid import ComplexField
from qimsim.grid import WaveContext
from qimsim.grid import wavenumber_axis
from qimsim.optics import FreeSpace
from qimsim.optics import GaussianPupil
from qimsim.optics import Mask
from qimsim.optics import SingleSlit
from qimsim.optics import ThinLens
from qimsim.optics import analytic_gB
from qimsim.optics import propagate
from qimsim.optics import propagate_through
from qimsim.optics import quadratic_phase
from qimsim.optics.propagate import free_space_transfer


@pytest.fixture
def fine_grid() -> Axis:
    """128 samples over 2 mm; free space up to about 1 cm stays unaliased."""
    return Axis.centered(2e-3, 128)


def test_free_space_matches_closed_form_for_grid_mode(
    ctx: WaveContext, fine_grid: Axis
) -> None:
    d = 0.01
    p = wavenumber_axis(fine_grid).points()[64 + 7]
    x = fine_grid.points()
    field = ComplexField(fine_grid, np.exp(1j * p * x))

    result = propagate(field, FreeSpace(d=d), ctx)

    np.testing.assert_allclose(result.samples, analytic_gB(ctx, d, x, p), atol=1e-10)


def test_free_space_composes(ctx: WaveContext, fine_grid: Axis) -> None:
    rng = np.random.default_rng(2)
    samples = rng.standard_normal(128) + 1j * rng.standard_normal(128)
    field = ComplexField(fine_grid, samples)

    twice = propagate_through(field, [FreeSpace(d=0.004), FreeSpace(d=0.006)], ctx)
    once = propagate(field, FreeSpace(d=0.01), ctx)

    np.testing.assert_allclose(twice.samples, once.samples, atol=1e-9)


def test_free_space_preserves_power(ctx: WaveContext, fine_grid: Axis) -> None:
    rng = np.random.default_rng(3)
    field = ComplexField(fine_grid, rng.standard_normal(128))
    assert propagate(field, FreeSpace(d=0.01), ctx).power() == pytest.approx(
        field.power(), rel=1e-12
    )


def test_long_free_space_on_fine_grid_raises(ctx: WaveContext) -> None:
    field = ComplexField.constant(Axis.centered(2e-3, 256))
    with pytest.raises(SamplingViolation) as excinfo:
        propagate(field, FreeSpace(d=1.0), ctx)
    assert "exceeds pi" in str(excinfo.value)


def test_strong_lens_raises(ctx: WaveContext) -> None:
    field = ComplexField.constant(Axis.centered(2e-3, 256))
    with pytest.raises(SamplingViolation):
        propagate(field, ThinLens(f=0.01), ctx)


def test_weak_lens_is_a_pure_quadratic_phase(ctx: WaveContext) -> None:
    axis = Axis.centered(2e-3, 256)
    result = propagate(ComplexField.constant(axis), ThinLens(f=1.0), ctx)
    x = axis.points()
    np.testing.assert_allclose(np.abs(result.samples), 1.0, atol=1e-12)
    np.testing.assert_allclose(result.samples, np.exp(-0.5j * ctx.k * x**2), atol=1e-9)


def test_mask_and_pupil_act_pointwise(ctx: WaveContext) -> None:
    axis = Axis.centered(2e-3, 200)
    x = axis.points()

    slit = propagate(ComplexField.constant(axis), Mask(profile=SingleSlit(a=5e-4)), ctx)
    pupil = propagate(ComplexField.constant(axis), GaussianPupil(A=1e-7), ctx)

    np.testing.assert_array_equal(slit.samples, (np.abs(x) < 2.5e-4).astype(complex))
    np.testing.assert_allclose(pupil.samples, np.exp(-(x**2) / 2e-7), atol=1e-15)


def test_gaussian_beam_spreads_like_closed_form(ctx: WaveContext) -> None:
    axis = Axis.centered(2e-3, 512)
    x = axis.points()
    waist = 2e-5
    rayleigh = ctx.k * waist**2 / 2
    field = ComplexField(axis, np.exp(-(x**2) / waist**2).astype(complex))

    widths = []
    for d in (0.002, 0.005):
        intensity = propagate(field, FreeSpace(d=d), ctx).intensity()
        second_moment = np.sum(x**2 * intensity) / np.sum(intensity)
        widths.append(2 * np.sqrt(second_moment))

    expected = [waist * np.sqrt(1 + (d / rayleigh) ** 2) for d in (0.002, 0.005)]
    np.testing.assert_allclose(widths, expected, rtol=1e-3)


def test_very_weak_lens_leaves_field_unchanged(
    ctx: WaveContext, fine_grid: Axis
) -> None:
    rng = np.random.default_rng(4)
    samples = rng.standard_normal(128) + 1j * rng.standard_normal(128)
    field = ComplexField(fine_grid, samples)

    result = propagate(field, ThinLens(f=1e15), ctx)

    np.testing.assert_allclose(result.samples, field.samples, rtol=0, atol=1e-10)


def test_propagation_phases_have_unit_modulus(
    ctx: WaveContext, fine_grid: Axis
) -> None:
    rng = np.random.default_rng(5)
    x = rng.uniform(-1e-2, 1e-2, 10_000)
    q = rng.uniform(-1e8, 1e8)

    np.testing.assert_allclose(np.abs(quadratic_phase(x, q)), 1.0, atol=1e-12)
    np.testing.assert_allclose(
        np.abs(free_space_transfer(fine_grid, 0.01, ctx)), 1.0, atol=1e-12
    )
