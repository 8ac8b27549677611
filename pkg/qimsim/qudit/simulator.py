"""Separable states that reproduce a commuting family of local measurements."""

from __future__ import annotations

import itertools
import logging
from collections.abc import Sequence

import numpy as np
from numpy.typing import NDArray
from scipy import linalg

from qimsim.exceptions import DimMismatch
from qimsim.exceptions import NonCommutingFamily
from qimsim.qudit.states import Observable
from qimsim.qudit.states import PureState
from qimsim.qudit.states import SeparableState
from qimsim.qudit.states import projector

logger = logging.getLogger(__name__)

COMMUTATOR_TOL = 1e-10
WEIGHT_FLOOR = 1e-15
TIE_DECIMALS = 9
EIGENBASIS_ATTEMPTS = 8
EIGENBASIS_TOL = 1e-9


def check_commuting(family: Sequence[Observable], tol: float = COMMUTATOR_TOL) -> None:
    for (i, first), (j, second) in itertools.combinations(enumerate(family), 2):
        a, b = first.entries, second.entries
        norm = np.linalg.norm(a @ b - b @ a)
        if norm > tol:
            raise NonCommutingFamily(
                f"Observables {i} and {j} do not commute: commutator norm {norm:.3g}."
            )


def off_diagonal_residual(
    basis: NDArray[np.complex128], family: Sequence[Observable]
) -> float:
    """Largest off-diagonal norm of a family member written in ``basis``."""
    residual = 0.0
    for obs in family:
        rotated = basis.conj().T @ obs.entries @ basis
        off_diagonal = rotated - np.diag(np.diag(rotated))
        residual = max(residual, float(np.linalg.norm(off_diagonal)))
    return residual


def common_eigenbasis(
    family: Sequence[Observable], d: int, rng: np.random.Generator | None = None
) -> tuple[NDArray[np.complex128], NDArray[np.float64]]:
    """
    Simultaneous eigenvectors of a commuting family and their eigenvalue tuples.

    A random combination of the family is diagonalized and the result is
    accepted once it diagonalizes every member; a combination that happens to
    merge two joint eigenspaces is redrawn. Columns are ordered
    lexicographically by their tuple of family eigenvalues.

    Returns:
        (basis, eigenvalues) with basis columns phi_j and eigenvalues[j, i] the
        eigenvalue of family[i] on phi_j.

    Raises:
        NonCommutingFamily: If no draw yields a joint eigenbasis.
    """
    if not family:
        return np.eye(d, dtype=np.complex128), np.zeros((d, 0))
    rng = rng or np.random.default_rng(0)
    scale = max(float(np.linalg.norm(obs.entries)) for obs in family) or 1.0
    for attempt in range(EIGENBASIS_ATTEMPTS):
        weights = rng.uniform(0.5, 1.5, len(family))
        combined = sum(w * obs.entries for w, obs in zip(weights, family, strict=True))
        _, basis = linalg.eigh(combined)
        if off_diagonal_residual(basis, family) <= EIGENBASIS_TOL * scale:
            break
        logger.debug(f"Combination {attempt} merged joint eigenspaces; redrawing")
    else:
        raise NonCommutingFamily(
            f"No joint eigenbasis found in {EIGENBASIS_ATTEMPTS} random combinations."
        )
    eigenvalues = np.array(
        [[np.vdot(v, obs.entries @ v).real for obs in family] for v in basis.T]
    )
    keys = np.round(eigenvalues, TIE_DECIMALS)
    order = np.lexsort(keys.T[::-1])
    return basis[:, order], eigenvalues[order]


def separable_simulator(psi: PureState, family: Sequence[Observable]) -> SeparableState:
    """
    Classically correlated state with the same statistics as ``psi`` for ``family`` (x) O_B.

    With phi_j the common eigenbasis of the family, psi = sum_j phi_j (x) omega_j
    and the result is sum_j p_j |phi_j><phi_j| (x) |w_j><w_j| with
    p_j = |omega_j|^2 and w_j = omega_j / |omega_j|.

    Raises:
        DimMismatch: If a family member does not act on subsystem A.
        NonCommutingFamily: If two family members do not commute.
    """
    d_a, d_b = psi.dims
    for obs in family:
        if obs.dims != (d_a,):
            raise DimMismatch(f"Family observable dims {obs.dims} do not act on A ({d_a},).")
    check_commuting(family)

    basis, _ = common_eigenbasis(family, d_a)
    omegas = basis.conj().T @ psi.coefficients()
    terms = []
    for phi, omega in zip(basis.T, omegas, strict=True):
        weight = float(np.vdot(omega, omega).real)
        if weight <= WEIGHT_FLOOR:
            continue
        terms.append((weight, projector(phi), projector(omega)))
    logger.debug(f"Separable simulator with {len(terms)} product terms")
    return SeparableState.from_terms((d_a, d_b), terms)
