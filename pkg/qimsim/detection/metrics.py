from __future__ import annotations

import logging

import numpy as np
from scipy.signal import find_peaks

from qimsim.detection.patterns import Pattern
from qimsim.exceptions import EmptyPattern
from qimsim.exceptions import InvalidGrid
from qimsim.exceptions import NoFringes

logger = logging.getLogger(__name__)

MIN_FRINGES = 3
PROMINENCE_FRACTION = 0.02


def _refined_peaks(pattern: Pattern) -> np.ndarray:
    """Interior maxima positions, refined by a parabola through three samples."""
    v = pattern.values
    span = float(v.max() - v.min())
    if span <= 0:
        return np.empty(0)
    peaks, _ = find_peaks(v, prominence=PROMINENCE_FRACTION * span)
    x = pattern.axis.points()
    dx = pattern.axis.spacing
    left, mid, right = v[peaks - 1], v[peaks], v[peaks + 1]
    curvature = left - 2.0 * mid + right
    shift = np.where(curvature != 0, 0.5 * (left - right) / curvature, 0.0)
    return x[peaks] + shift * dx


def fringe_spacing(pattern: Pattern) -> float:
    """Mean distance between adjacent interior maxima.

    Raises:
        NoFringes: If fewer than three interior maxima are found.
    """
    positions = _refined_peaks(pattern)
    if positions.size < MIN_FRINGES:
        raise NoFringes(
            f"Found {positions.size} interior maxima; at least {MIN_FRINGES} needed."
        )
    return float(np.mean(np.diff(positions)))


def visibility(pattern: Pattern) -> float:
    """(max - min) / (max + min) over the central half of the axis."""
    n = pattern.axis.n
    central = pattern.values[n // 4 : n - n // 4]
    hi, lo = float(central.max()), float(central.min())
    if hi + lo <= 0:
        return 0.0
    return (hi - lo) / (hi + lo)


def _normalized_pair(p: Pattern, ref: Pattern) -> tuple[np.ndarray, np.ndarray]:
    if p.axis.n != ref.axis.n:
        raise InvalidGrid(
            f"Patterns have different sample counts: {p.axis.n} vs {ref.axis.n}."
        )
    return p.normalized().values, ref.normalized().values


def image_error(p: Pattern, ref: Pattern) -> float:
    """Largest absolute difference after scaling both patterns to unit peak."""
    a, b = _normalized_pair(p, ref)
    return float(np.max(np.abs(a - b)))


def rms_deviation(p: Pattern, ref: Pattern) -> float:
    """Root-mean-square difference after scaling both patterns to unit peak."""
    a, b = _normalized_pair(p, ref)
    return float(np.sqrt(np.mean((a - b) ** 2)))


def image_centroid(pattern: Pattern) -> float:
    total = float(pattern.values.sum())
    if total <= 0:
        raise EmptyPattern("Centroid of an empty pattern is undefined.")
    return float(np.sum(pattern.axis.points() * pattern.values) / total)


def _half_maximum_crossings(pattern: Pattern) -> tuple[float, float]:
    v = pattern.normalized().values
    x = pattern.axis.points()
    above = np.flatnonzero(v >= 0.5)
    first, last = int(above[0]), int(above[-1])
    if first == 0 or last == v.size - 1:
        raise InvalidGrid("Image touches the end of the detector axis.")

    def crossing(i: int, j: int) -> float:
        return float(x[i] + (0.5 - v[i]) * (x[j] - x[i]) / (v[j] - v[i]))

    return crossing(first - 1, first), crossing(last, last + 1)


def measure_magnification(pattern: Pattern, object_edge: float) -> float:
    """
    Scale s such that the pattern looks like the object at s * x.

    The image half-width is taken between the outermost half-maximum
    crossings; ``object_edge`` is the object's outer half-width.
    """
    left, right = _half_maximum_crossings(pattern)
    scale = object_edge / (0.5 * (right - left))
    logger.debug(f"Image edges at {left:.4g} and {right:.4g} m, scale {scale:.4g}")
    return scale
