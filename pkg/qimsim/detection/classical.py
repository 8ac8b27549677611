from __future__ import annotations

import logging

import numpy as np
from numpy.typing import NDArray

from qimsim.detection.amplitude import check_mode_axes
from qimsim.detection.patterns import CoincidenceMap
from qimsim.detection.patterns import Pattern
from qimsim.detection.patterns import finish
from qimsim.exceptions import DetectorMismatch
from qimsim.exceptions import PairingOutOfRange
from qimsim.optics.elements import Bucket
from qimsim.optics.elements import BucketMode
from qimsim.optics.elements import DetectorSpec
from qimsim.optics.elements import FarFieldPoint
from qimsim.optics.transfer import TransferMatrix
from qimsim.sources.classical import ClassicalEnsemble

logger = logging.getLogger(__name__)


def mode_intensity_a(
    gA: TransferMatrix,  # noqa: N803
    detector1: DetectorSpec,
    allow_amplitude: bool = False,
) -> NDArray[np.float64]:
    """
    Detector 1 signal for each input mode, computed from |g_A| only.

    A far-field point (and, when allowed, an amplitude bucket) sees the
    zero-wavenumber projection of each column; its modulus ignores per-mode
    phases exactly.
    """
    dx = gA.out_axis.spacing
    match detector1:
        case Bucket(mode=BucketMode.INTENSITY):
            return np.sum(gA.intensity(), axis=0) * dx
        case FarFieldPoint():
            return np.abs(np.sum(gA.base, axis=0) * dx) ** 2
        case Bucket(mode=BucketMode.AMPLITUDE) if allow_amplitude:
            return np.abs(np.sum(gA.base, axis=0) * dx) ** 2
        case Bucket(mode=BucketMode.AMPLITUDE):
            raise DetectorMismatch(
                "An amplitude-integrated bucket has no meaning for a classically "
                "correlated source; use the intensity bucket."
            )
        case _:
            raise DetectorMismatch(
                f"Detector '{detector1.kind}' cannot be reduced to a single count; "
                f"use classical_coincidence_map for point arrays."
            )


def incoherent_sum(
    weights: NDArray[np.float64],
    partners: NDArray[np.int64],
    intensity_a: NDArray[np.float64],
    gB: TransferMatrix,  # noqa: N803
) -> NDArray[np.float64]:
    """sum_p w(p) I_A(p) |gB(x2, partner(p))|^2 over modes with an on-grid partner."""
    valid = (partners >= 0) & (weights > 0)
    if not np.any(valid):
        raise PairingOutOfRange("No weighted mode has its partner on the mode grid.")
    dropped = int(np.count_nonzero((partners < 0) & (weights > 0)))
    if dropped:
        logger.debug(f"{dropped} weighted modes have no partner on the grid")
    intensity_b = gB.intensity()[:, partners[valid]]
    return intensity_b @ (weights[valid] * intensity_a[valid])


def classical_coincidence(
    ens: ClassicalEnsemble,
    gA: TransferMatrix,  # noqa: N803
    gB: TransferMatrix,  # noqa: N803
    detector1: DetectorSpec,
    raw: bool = False,
) -> Pattern:
    """
    Coincidence rate of the classically correlated ensemble over x2.

    Consumes only |g|^2, so per-mode phases on either arm leave it unchanged.

    Raises:
        PairingOutOfRange: If no weighted mode has its partner on the grid.
        DetectorMismatch: For amplitude buckets and point arrays as detector 1.
    """
    mode_axis = check_mode_axes(gA, gB)
    intensity_a = mode_intensity_a(gA, detector1)
    values = incoherent_sum(
        ens.weights(mode_axis), ens.partners(mode_axis), intensity_a, gB
    )
    return finish(gB.out_axis, values, raw)


def classical_coincidence_map(
    ens: ClassicalEnsemble,
    gA: TransferMatrix,  # noqa: N803
    gB: TransferMatrix,  # noqa: N803
    raw: bool = False,
) -> CoincidenceMap:
    """Full C(x1, x2) = sum_p w(p) |gA(x1, p)|^2 |gB(x2, p / epsilon)|^2."""
    mode_axis = check_mode_axes(gA, gB)
    weights = ens.weights(mode_axis)
    partners = ens.partners(mode_axis)
    valid = (partners >= 0) & (weights > 0)
    if not np.any(valid):
        raise PairingOutOfRange("No weighted mode has its partner on the mode grid.")
    values = (gA.intensity()[:, valid] * weights[valid]) @ gB.intensity()[
        :, partners[valid]
    ].T
    result = CoincidenceMap(gA.out_axis, gB.out_axis, values)
    return result if raw else result.normalized()
