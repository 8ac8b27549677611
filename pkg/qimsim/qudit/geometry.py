from __future__ import annotations

import numpy as np

from qimsim.exceptions import DimMismatch
from qimsim.qudit.states import DensityMatrix


def _same_dims(*states: DensityMatrix) -> None:
    if len({tuple(s.dims) for s in states}) != 1:
        raise DimMismatch(f"Dimensions differ: {[s.dims for s in states]}.")


def hs_distance(a: DensityMatrix, b: DensityMatrix) -> float:
    """Hilbert-Schmidt distance sqrt(tr[(a - b)^2])."""
    _same_dims(a, b)
    return float(np.linalg.norm(a.entries - b.entries))


def hyperplane_residual(rho: DensityMatrix, tau0: DensityMatrix, tau: DensityMatrix) -> float:
    """Signed tr[(rho - tau0)(tau - tau0)]; zero on the tangent hyperplane through tau0."""
    _same_dims(rho, tau0, tau)
    return float(np.trace((rho.entries - tau0.entries) @ (tau.entries - tau0.entries)).real)
