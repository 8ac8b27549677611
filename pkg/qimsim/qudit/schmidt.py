from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np
from numpy.typing import ArrayLike
from numpy.typing import NDArray

from qimsim.exceptions import DimMismatch
from qimsim.exceptions import InvalidState
from qimsim.exceptions import NotMaximallyEntangled
from qimsim.qudit.states import PureState

MAXIMAL_TOL = 1e-10


class SchmidtDecomposition(NamedTuple):
    """psi = sum_k coefficients[k] basis_a[:, k] (x) basis_b[:, k]."""

    coefficients: NDArray[np.float64]
    basis_a: NDArray[np.complex128]
    basis_b: NDArray[np.complex128]

    def reconstruct(self) -> NDArray[np.complex128]:
        matrix = np.einsum("k,ik,jk->ij", self.coefficients, self.basis_a, self.basis_b)
        return matrix.reshape(-1)


def schmidt(psi: PureState) -> SchmidtDecomposition:
    """Schmidt form from the singular value decomposition of c_jk.

    Coefficients come back in descending order; there are min(d_A, d_B) of them.
    """
    u, s, vh = np.linalg.svd(psi.coefficients(), full_matrices=False)
    return SchmidtDecomposition(s, u, vh.T)


def is_maximally_entangled(psi: PureState, tol: float = MAXIMAL_TOL) -> bool:
    d_a, d_b = psi.dims
    if d_a != d_b:
        return False
    target = 1.0 / math.sqrt(d_a)
    return bool(np.all(np.abs(schmidt(psi).coefficients - target) <= tol))


def transferred_operator(
    operator: ArrayLike, psi: PureState
) -> NDArray[np.complex128]:
    """The operator B with (A (x) 1) psi = (1 (x) B) psi for maximally entangled psi.

    In the Schmidt bases B has the matrix elements of A transposed; for the
    computational-basis state sum_j |jj> / sqrt(d) it is plainly A^T.

    Raises:
        NotMaximallyEntangled: If the Schmidt coefficients are not all 1/sqrt(d).
    """
    a = np.asarray(operator, dtype=np.complex128)
    d = psi.dims[0]
    if a.shape != (d, d):
        raise DimMismatch(f"Operator shape {a.shape} does not act on dimension {d}.")
    if not is_maximally_entangled(psi):
        raise NotMaximallyEntangled(
            f"Schmidt coefficients {np.round(schmidt(psi).coefficients, 6)} are not equal."
        )
    decomposition = schmidt(psi)
    phi, chi = decomposition.basis_a, decomposition.basis_b
    in_schmidt_basis = phi.conj().T @ a @ phi
    # chi_k <- sum_j A_jk: B = sum_jk A_jk |chi_k><chi_j|
    return chi @ in_schmidt_basis.T @ chi.conj().T


def transfer_to_B(operator: ArrayLike, psi: PureState) -> PureState:  # noqa: N802
    """(1 (x) A^T) psi, normalized; equal to (A (x) 1) psi up to that norm."""
    b = transferred_operator(operator, psi)
    vector = np.kron(np.eye(psi.dims[0]), b) @ psi.amplitudes
    if np.linalg.norm(vector) == 0:
        raise InvalidState("Operator annihilates the state.")
    return PureState.normalized(psi.dims, vector)
