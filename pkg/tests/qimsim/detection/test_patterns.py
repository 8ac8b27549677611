import numpy as np
import pytest

from qimsim.detection import Pattern
from qimsim.detection import fringe_spacing
from qimsim.detection import image_centroid
from qimsim.detection import image_error
from qimsim.detection import measure_magnification
from qimsim.detection import reference_pattern
from qimsim.detection import rms_deviation
from qimsim.detection import visibility
from qimsim.exceptions import EmptyPattern
from qimsim.exceptions import InvalidGrid
from qimsim.exceptions import NoFringes
from qimsim.grid import Axis
from qimsim.optics import DoubleSlit
from qimsim.optics import SingleSlit


@pytest.fixture
def fringes() -> Pattern:
    """cos^2 fringes with a 1.404 mm period over 10 mm."""
    axis = Axis.centered(10e-3, 2000)
    return Pattern(axis, np.cos(np.pi * axis.points() / 1.404e-3) ** 2)


def test_pattern_rejects_negative_values() -> None:
    with pytest.raises(InvalidGrid):
        Pattern(Axis.centered(1.0, 3), [1.0, -0.5, 1.0])


def test_tiny_negative_round_off_is_clipped() -> None:
    pattern = Pattern(Axis.centered(1.0, 3), [1.0, -1e-15, 1.0])
    assert pattern.values[1] == 0.0


def test_zero_pattern_cannot_be_normalized() -> None:
    with pytest.raises(EmptyPattern):
        Pattern(Axis.centered(1.0, 3), np.zeros(3)).normalized()


def test_fringe_spacing_of_cosine_squared(fringes: Pattern) -> None:
    assert fringe_spacing(fringes) == pytest.approx(1.404e-3, rel=1e-3)


def test_visibility_of_full_contrast_fringes(fringes: Pattern) -> None:
    assert visibility(fringes) >= 0.999


def test_flat_pattern_has_no_fringes() -> None:
    flat = Pattern(Axis.centered(1.0, 100), np.ones(100))
    assert visibility(flat) == 0.0
    with pytest.raises(NoFringes):
        fringe_spacing(flat)


def test_single_bump_has_no_fringe_spacing() -> None:
    axis = Axis.centered(1.0, 200)
    bump = Pattern(axis, np.exp(-(axis.points() ** 2) / 0.01))
    with pytest.raises(NoFringes) as excinfo:
        fringe_spacing(bump)
    assert "at least 3" in str(excinfo.value)


def test_image_error_and_rms_ignore_scale(fringes: Pattern) -> None:
    scaled = Pattern(fringes.axis, 7.0 * fringes.values)
    assert image_error(scaled, fringes) == pytest.approx(0.0, abs=1e-12)
    assert rms_deviation(scaled, fringes) == pytest.approx(0.0, abs=1e-12)


def test_image_error_needs_matching_axes(fringes: Pattern) -> None:
    other = Pattern(Axis.centered(10e-3, 100), np.ones(100))
    with pytest.raises(InvalidGrid):
        image_error(fringes, other)


def test_reference_of_symmetric_mask_ignores_inversion() -> None:
    axis = Axis.centered(4e-3, 400)
    mask = DoubleSlit(d=1e-3, a=4e-4)
    upright = reference_pattern(mask, axis, 1.0)
    inverted = reference_pattern(mask, axis, -1.0)
    np.testing.assert_array_equal(upright.values, inverted.values)


def test_centroid_follows_shift() -> None:
    axis = Axis.centered(4e-3, 4000)
    bump = Pattern(axis, np.exp(-((axis.points() - 3e-4) ** 2) / (2 * (1e-4) ** 2)))
    assert image_centroid(bump) == pytest.approx(3e-4, rel=1e-6)


def test_magnification_of_stretched_slit() -> None:
    axis = Axis.centered(4e-3, 4001)
    slit = SingleSlit(a=1e-3)
    image = reference_pattern(slit, axis, 0.5)
    assert measure_magnification(image, slit.outer_edge) == pytest.approx(0.5, rel=0.02)
