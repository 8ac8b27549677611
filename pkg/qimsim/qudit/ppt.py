from __future__ import annotations

import logging
import math

import numpy as np
from numpy.typing import NDArray
from scipy import optimize

from qimsim.exceptions import DimMismatch
from qimsim.exceptions import DimUnsupported
from qimsim.exceptions import InvalidDistribution
from qimsim.qudit.states import DensityMatrix

logger = logging.getLogger(__name__)

PPT_TOL = 1e-10
THRESHOLD_TOL = 1e-6
PPT_DECIDES = {(2, 2), (2, 3), (3, 2)}


def partial_transpose(rho: DensityMatrix, subsystem: str = "B") -> NDArray[np.complex128]:
    if len(rho.dims) != 2:
        raise DimMismatch(f"Partial transpose needs a bipartite state, got dims {rho.dims}.")
    d_a, d_b = rho.dims
    r = rho.entries.reshape(d_a, d_b, d_a, d_b)
    match subsystem:
        case "B":
            r = r.transpose(0, 3, 2, 1)
        case "A":
            r = r.transpose(2, 1, 0, 3)
        case _:
            raise DimMismatch(f"Subsystem must be 'A' or 'B', got {subsystem!r}.")
    return r.reshape(d_a * d_b, d_a * d_b)


def min_pt_eigenvalue(rho: DensityMatrix) -> float:
    return float(np.linalg.eigvalsh(partial_transpose(rho)).min())


def is_ppt(rho: DensityMatrix, tol: float = PPT_TOL) -> bool:
    return min_pt_eigenvalue(rho) >= -tol


def mix_with_noise(rho: DensityMatrix, s: float) -> DensityMatrix:
    """(1 - s) 1/N + s rho."""
    if not 0.0 <= s <= 1.0:
        raise InvalidDistribution(f"Mixing weight must lie in [0, 1], got {s}.")
    n = math.prod(rho.dims)
    return DensityMatrix(rho.dims, (1.0 - s) * np.eye(n) / n + s * rho.entries)


def ppt_threshold(rho: DensityMatrix, tol: float = THRESHOLD_TOL) -> float:
    """
    Largest noise-mixing weight s for which (1 - s) 1/N + s rho stays PPT.

    The minimum partial-transpose eigenvalue is concave in s and positive at
    s = 0, so a single bisection bracket finds the crossing.

    Raises:
        DimUnsupported: Outside 2x2 and 2x3, where PPT does not decide separability.
    """
    if tuple(rho.dims) not in PPT_DECIDES:
        raise DimUnsupported(
            f"PPT decides separability only for 2x2 and 2x3 systems, got {rho.dims}."
        )
    if is_ppt(rho):
        return 1.0

    def margin(s: float) -> float:
        return min_pt_eigenvalue(mix_with_noise(rho, s))

    threshold = optimize.bisect(margin, 0.0, 1.0, xtol=tol / 10.0)
    logger.debug(f"PPT threshold {threshold:.9f}")
    return float(threshold)
