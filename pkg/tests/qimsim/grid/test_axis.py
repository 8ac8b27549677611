import numpy as np
import pytest

from qimsim.exceptions import InvalidGrid
from qimsim.grid import Axis
from qimsim.grid import ComplexField
from qimsim.grid import WaveContext
from tests.fixtures.constants import DEGENERATE_WAVELENGTH
from tests.fixtures.constants import PUMP_WAVELENGTH


def test_axis_samples_sit_at_midpoints() -> None:
    axis = Axis(0.0, 1.0, 4)
    assert axis.spacing == pytest.approx(0.25)
    np.testing.assert_allclose(axis.points(), [0.125, 0.375, 0.625, 0.875])


def test_centered_axis_is_symmetric() -> None:
    np.testing.assert_allclose(Axis.centered(2.0, 4).points(), [-0.75, -0.25, 0.25, 0.75])


@pytest.mark.parametrize(
    ("x_min", "x_max", "n"),
    [(0.0, 1.0, 1), (1.0, 0.0, 10), (0.0, 0.0, 10), (0.0, float("inf"), 10)],
    ids=["one-sample", "reversed", "empty", "infinite"],
)
def test_axis_rejects_invalid_bounds(x_min: float, x_max: float, n: int) -> None:
    with pytest.raises(InvalidGrid):
        Axis(x_min, x_max, n)


def test_nearest_index_returns_minus_one_off_axis() -> None:
    axis = Axis(0.0, 1.0, 4)
    assert axis.nearest_index(0.3) == 1
    assert axis.nearest_index(0.999) == 3
    assert axis.nearest_index(1.0) == -1
    assert axis.nearest_index(-0.1) == -1


def test_from_spacing_places_first_midpoint() -> None:
    axis = Axis.from_spacing(-3.0, 2.0, 4)
    np.testing.assert_allclose(axis.points(), [-3.0, -1.0, 1.0, 3.0])


def test_degenerate_context_halves_pump_frequency() -> None:
    ctx = WaveContext.degenerate(PUMP_WAVELENGTH)
    assert ctx.wavelength == pytest.approx(DEGENERATE_WAVELENGTH, rel=1e-12)
    assert ctx.k == pytest.approx(2 * np.pi / DEGENERATE_WAVELENGTH, rel=1e-12)


def test_context_rejects_nonpositive_frequency() -> None:
    with pytest.raises(InvalidGrid):
        WaveContext(omega=0.0)


def test_field_rejects_wrong_length_and_nonfinite_samples() -> None:
    axis = Axis(0.0, 1.0, 4)
    with pytest.raises(InvalidGrid) as excinfo:
        ComplexField(axis, np.ones(3))
    assert "expected (4,)" in str(excinfo.value)
    with pytest.raises(InvalidGrid):
        ComplexField(axis, [1.0, np.nan, 1.0, 1.0])


def test_field_samples_are_read_only() -> None:
    field = ComplexField.constant(Axis(0.0, 1.0, 4))
    with pytest.raises(ValueError, match="read-only"):
        field.samples[0] = 2.0
