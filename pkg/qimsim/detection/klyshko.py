"""Random-phase ensemble by Monte Carlo, with its averaged closed form."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from qimsim.detection.amplitude import check_mode_axes
from qimsim.detection.amplitude import paired
from qimsim.detection.amplitude import reduce_detector1
from qimsim.detection.classical import incoherent_sum
from qimsim.detection.classical import mode_intensity_a
from qimsim.detection.patterns import Pattern
from qimsim.detection.patterns import finish
from qimsim.exceptions import DetectorMismatch
from qimsim.exceptions import InvalidDistribution
from qimsim.optics.elements import Bucket
from qimsim.optics.elements import BucketMode
from qimsim.optics.elements import DetectorSpec
from qimsim.optics.elements import FarFieldPoint
from qimsim.optics.transfer import TransferMatrix
from qimsim.sources.profiles import partner_indices
from qimsim.sources.random_phase import RandomPhaseEnsemble
from qimsim.sources.random_phase import draw_realization
from qimsim.sources.rng import realization_rng

logger = logging.getLogger(__name__)

BATCH_SIZE = 512


@dataclass(frozen=True, eq=False)
class KlyshkoResult:
    """Monte-Carlo mean pattern with its per-bin standard error, on the same scale."""

    pattern: Pattern
    stderr: NDArray[np.float64]
    n_realizations: int


def _mode_phases(
    ens: RandomPhaseEnsemble, n_modes: int, start: int, stop: int, frozen: bool
) -> NDArray[np.float64]:
    """theta_A(p) + theta_B(-p) for realizations ``start`` to ``stop``."""
    if frozen:
        return np.zeros((stop - start, n_modes))
    rows = []
    for index in range(start, stop):
        theta_a, theta_b = draw_realization(ens, n_modes, realization_rng(ens.seed, index))
        rows.append(theta_a + theta_b[::-1])
    return np.array(rows)


def klyshko_mc(
    ens: RandomPhaseEnsemble,
    gA: TransferMatrix,  # noqa: N803
    gB: TransferMatrix,  # noqa: N803
    n_realizations: int,
    detector1: DetectorSpec | None = None,
    raw: bool = False,
    frozen: bool = False,
) -> KlyshkoResult:
    """
    Averages the coincidence rate over independent random-phase realizations.

    Realization ``i`` uses its own generator derived from ``(ens.seed, i)``, so
    results do not depend on how realizations are batched. ``frozen`` sets all
    phases to zero, which reproduces the coherent biphoton pattern.

    Raises:
        InvalidDistribution: If ``n_realizations`` is below one.
    """
    if n_realizations < 1:
        raise InvalidDistribution("Monte Carlo needs at least one realization.")
    detector1 = detector1 or Bucket()
    if not isinstance(detector1, Bucket | FarFieldPoint):
        raise DetectorMismatch(
            f"Detector '{detector1.kind}' cannot be reduced to a single count."
        )
    mode_axis = check_mode_axes(gA, gB)
    n_modes = mode_axis.n
    weights = ens.amplitudes(mode_axis) * mode_axis.spacing
    g_a = gA.entries
    g_b = paired(gB)
    dx1 = gA.out_axis.spacing
    projection = np.sum(g_a, axis=0) * dx1

    total = np.zeros(gB.out_axis.n)
    total_sq = np.zeros(gB.out_axis.n)
    for start in range(0, n_realizations, BATCH_SIZE):
        stop = min(start + BATCH_SIZE, n_realizations)
        u = weights * np.exp(1j * _mode_phases(ens, n_modes, start, stop, frozen))
        match detector1:
            case Bucket(mode=BucketMode.INTENSITY):
                rates = np.array(
                    [
                        reduce_detector1((g_a * row) @ g_b.T, gA.out_axis, detector1)
                        for row in u
                    ]
                )
            case _:
                rates = np.abs((u * projection) @ g_b.T) ** 2
        total += rates.sum(axis=0)
        total_sq += (rates**2).sum(axis=0)

    mean = total / n_realizations
    if n_realizations > 1:
        variance = (total_sq - n_realizations * mean**2) / (n_realizations - 1)
        stderr = np.sqrt(np.clip(variance, 0.0, None) / n_realizations)
    else:
        stderr = np.zeros_like(mean)

    pattern = finish(gB.out_axis, mean, raw=True)
    scale = 1.0 if raw else 1.0 / pattern.peak
    logger.debug(f"Monte Carlo over {n_realizations} realizations finished")
    return KlyshkoResult(
        Pattern(pattern.axis, pattern.values * scale), stderr * scale, n_realizations
    )


def klyshko_closed_form(
    ens: RandomPhaseEnsemble,
    gA: TransferMatrix,  # noqa: N803
    gB: TransferMatrix,  # noqa: N803
    detector1: DetectorSpec | None = None,
    raw: bool = False,
) -> Pattern:
    """Infinite-realization limit: sum_p |f(p) dp|^2 I_A(p) |gB(x2, -p)|^2."""
    detector1 = detector1 or Bucket()
    mode_axis = check_mode_axes(gA, gB)
    weights = (ens.amplitudes(mode_axis) * mode_axis.spacing) ** 2
    intensity_a = mode_intensity_a(gA, detector1, allow_amplitude=True)
    values = incoherent_sum(weights, partner_indices(mode_axis, -1.0), intensity_a, gB)
    return finish(gB.out_axis, values, raw)


def convergence_rate(errors: NDArray[np.float64], counts: NDArray[np.float64]) -> float:
    """Slope of log(error) against log(count); about -1/2 for Monte Carlo."""
    slope, _ = np.polyfit(np.log(counts), np.log(errors), 1)
    return float(slope) if math.isfinite(slope) else float("nan")
