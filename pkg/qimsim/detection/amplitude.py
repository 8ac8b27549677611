from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from qimsim.detection.patterns import Pattern
from qimsim.detection.patterns import finish
from qimsim.exceptions import DetectorMismatch
from qimsim.exceptions import ModeAxisMismatch
from qimsim.grid import Axis
from qimsim.optics.elements import Bucket
from qimsim.optics.elements import BucketMode
from qimsim.optics.elements import DetectorSpec
from qimsim.optics.elements import FarFieldPoint
from qimsim.optics.transfer import TransferMatrix
from qimsim.sources.biphoton import BiphotonSource
from qimsim.sources.biphoton import spdc_mode_weights

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AmplitudeMap:
    """Biphoton amplitude A[x1][x2]."""

    axis1: Axis
    axis2: Axis
    values: NDArray[np.complex128]


def check_mode_axes(*arms: TransferMatrix) -> Axis:
    """Shared mode axis of ``arms``; it must be symmetric about p = 0."""
    mode_axis = arms[0].mode_axis
    for arm in arms[1:]:
        if not arm.mode_axis.same_as(mode_axis):
            raise ModeAxisMismatch("Transfer matrices use different mode axes.")
    if abs(mode_axis.x_min + mode_axis.x_max) > 1e-9 * mode_axis.extent:
        raise ModeAxisMismatch("Mode axis must be symmetric about p = 0.")
    return mode_axis


def paired(g: TransferMatrix) -> NDArray[np.complex128]:
    """Entries evaluated at the partner mode -p."""
    return g.entries[:, ::-1]


def biphoton_amplitude(
    gA: TransferMatrix,  # noqa: N803
    gB: TransferMatrix,  # noqa: N803
    src: BiphotonSource,
) -> AmplitudeMap:
    """A(x1, x2) = sum_p f(p) gA(x1, p) gB(x2, -p) dp."""
    mode_axis = check_mode_axes(gA, gB)
    weights = spdc_mode_weights(src, mode_axis) * mode_axis.spacing
    values = (gA.entries * weights[np.newaxis, :]) @ paired(gB).T
    logger.debug(f"Biphoton amplitude map {values.shape}")
    return AmplitudeMap(gA.out_axis, gB.out_axis, values)


def reduce_detector1(
    values: NDArray[np.complex128], axis1: Axis, detector1: DetectorSpec
) -> NDArray[np.float64]:
    """Collapses the x1 dimension (first axis) the way ``detector1`` integrates."""
    match detector1:
        case Bucket(mode=BucketMode.INTENSITY):
            return np.sum(np.abs(values) ** 2, axis=0) * axis1.spacing
        case Bucket(mode=BucketMode.AMPLITUDE) | FarFieldPoint():
            return np.abs(np.sum(values, axis=0) * axis1.spacing) ** 2
        case _:
            raise DetectorMismatch(
                f"Detector '{detector1.kind}' cannot be reduced to a single count; "
                f"use a bucket or far-field point."
            )


def coincidence_pattern(
    ampl: AmplitudeMap, detector1: DetectorSpec, raw: bool = False
) -> Pattern:
    """Coincidence rate over x2 with detector 1 integrating its plane.

    Raises:
        DetectorMismatch: If ``detector1`` is a point array.
        EmptyPattern: If every rate is zero.
    """
    values = reduce_detector1(ampl.values, ampl.axis1, detector1)
    return finish(ampl.axis2, values, raw)


def singles_pattern(
    gArm: TransferMatrix,  # noqa: N803
    src: BiphotonSource,
    otherArm: TransferMatrix,  # noqa: N803
    raw: bool = False,
) -> Pattern:
    """Count rate in ``gArm`` with the partner photon traced out over its plane."""
    mode_axis = check_mode_axes(gArm, otherArm)
    f = spdc_mode_weights(src, mode_axis) * mode_axis.spacing
    other = otherArm.entries
    overlap = (other.T @ other.conj()) * otherArm.out_axis.spacing
    density = np.outer(f, f.conj()) * overlap
    g = paired(gArm)
    values = np.sum((g @ density) * g.conj(), axis=1)
    return finish(gArm.out_axis, values.real, raw)
