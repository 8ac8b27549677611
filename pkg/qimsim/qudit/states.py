"""Finite-dimensional bipartite states and observables.

Composite amplitudes are stored in ``numpy.kron`` order: index ``j * d_B + k``
is the product basis vector |j> (x) |k>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from dataclasses import field

import numpy as np
from numpy.typing import ArrayLike
from numpy.typing import NDArray

from qimsim.exceptions import DimMismatch
from qimsim.exceptions import InvalidState

NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
EIGEN_TOL = 1e-10
IMAG_TOL = 1e-10

Matrix = NDArray[np.complex128]


def _dims(dims: tuple[int, ...]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 1 for d in dims):
        raise DimMismatch(f"Subsystem dimensions must be positive, got {dims}.")
    return dims


def _square(entries: ArrayLike, dims: tuple[int, ...]) -> Matrix:
    matrix = np.array(entries, dtype=np.complex128, copy=True)
    n = math.prod(dims)
    if matrix.shape != (n, n):
        raise DimMismatch(f"Matrix has shape {matrix.shape}, dims {dims} need ({n}, {n}).")
    return matrix


def _check_hermitian(matrix: Matrix, what: str) -> None:
    if np.max(np.abs(matrix - matrix.conj().T), initial=0.0) > HERMITIAN_TOL:
        raise InvalidState(f"{what} is not Hermitian.")


@dataclass(frozen=True, eq=False)
class PureState:
    dims: tuple[int, int]
    amplitudes: NDArray[np.complex128]

    def __post_init__(self) -> None:
        dims = _dims(self.dims)
        vec = np.array(self.amplitudes, dtype=np.complex128, copy=True).reshape(-1)
        if vec.size != math.prod(dims):
            raise DimMismatch(f"{vec.size} amplitudes do not match dims {dims}.")
        if abs(np.linalg.norm(vec) - 1.0) > NORM_TOL:
            raise InvalidState(f"State norm is {np.linalg.norm(vec):.15g}, not 1.")
        vec.flags.writeable = False
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", vec)

    @classmethod
    def normalized(cls, dims: tuple[int, int], vector: ArrayLike) -> PureState:
        vec = np.asarray(vector, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(vec)
        if norm == 0:
            raise InvalidState("Cannot normalize the zero vector.")
        return cls(dims, vec / norm)

    @classmethod
    def from_coefficients(cls, coefficients: ArrayLike) -> PureState:
        """State sum_jk c[j, k] |j> (x) |k>."""
        c = np.asarray(coefficients, dtype=np.complex128)
        return cls(c.shape, c.reshape(-1))

    @classmethod
    def product(cls, phi: ArrayLike, chi: ArrayLike) -> PureState:
        phi, chi = np.asarray(phi), np.asarray(chi)
        return cls.normalized((phi.size, chi.size), np.kron(phi, chi))

    def coefficients(self) -> Matrix:
        return self.amplitudes.reshape(self.dims)

    def density(self) -> DensityMatrix:
        return DensityMatrix(self.dims, np.outer(self.amplitudes, self.amplitudes.conj()))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix on the composite space."""

    dims: tuple[int, ...]
    entries: Matrix

    def __post_init__(self) -> None:
        dims = _dims(self.dims)
        rho = _square(self.entries, dims)
        _check_hermitian(rho, "Density matrix")
        trace = np.trace(rho)
        if abs(trace - 1.0) > TRACE_TOL:
            raise InvalidState(f"Density matrix trace is {trace.real:.15g}, not 1.")
        if np.linalg.eigvalsh(rho).min() < -EIGEN_TOL:
            raise InvalidState("Density matrix has a negative eigenvalue.")
        rho.flags.writeable = False
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "entries", rho)

    @classmethod
    def maximally_mixed(cls, dims: tuple[int, ...]) -> DensityMatrix:
        n = math.prod(dims)
        return cls(dims, np.eye(n) / n)


@dataclass(frozen=True, eq=False)
class SeparableState(DensityMatrix):
    """Density matrix that keeps its explicit product decomposition."""

    terms: tuple[tuple[float, Matrix, Matrix], ...] = field(default=())

    @classmethod
    def from_terms(
        cls, dims: tuple[int, int], terms: list[tuple[float, Matrix, Matrix]]
    ) -> SeparableState:
        """sum_u p_u rho_A^u (x) rho_B^u from (p_u, rho_A^u, rho_B^u) triples."""
        n = math.prod(dims)
        rho = np.zeros((n, n), dtype=np.complex128)
        for weight, rho_a, rho_b in terms:
            rho += weight * np.kron(rho_a, rho_b)
        return cls(dims, (rho + rho.conj().T) / 2.0, tuple(terms))


@dataclass(frozen=True, eq=False)
class Observable:
    dims: tuple[int, ...]
    entries: Matrix

    def __post_init__(self) -> None:
        dims = _dims(self.dims)
        matrix = _square(self.entries, dims)
        _check_hermitian(matrix, "Observable")
        matrix.flags.writeable = False
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "entries", matrix)

    @classmethod
    def of(cls, matrix: ArrayLike) -> Observable:
        """Single-system observable from a square matrix."""
        m = np.asarray(matrix, dtype=np.complex128)
        return cls((m.shape[0],), m)

    def tensor(self, other: Observable) -> Observable:
        return Observable(self.dims + other.dims, np.kron(self.entries, other.entries))


def expectation(state: DensityMatrix | PureState, obs: Observable) -> float:
    """tr(O rho) for a density matrix or <psi|O|psi> for a pure state.

    Raises:
        DimMismatch: If the observable acts on a different space.
    """
    if math.prod(state.dims) != math.prod(obs.dims) or (
        len(obs.dims) > 1 and tuple(state.dims) != tuple(obs.dims)
    ):
        raise DimMismatch(f"Observable dims {obs.dims} do not match state {state.dims}.")
    if isinstance(state, PureState):
        value = np.vdot(state.amplitudes, obs.entries @ state.amplitudes)
    else:
        value = np.trace(obs.entries @ state.entries)
    if abs(value.imag) > IMAG_TOL * max(1.0, abs(value.real)):
        raise InvalidState(f"Expectation has imaginary part {value.imag:.3g}.")
    return float(value.real)


_PAULI = (
    np.eye(2, dtype=np.complex128),
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)


def pauli(index: int) -> Matrix:
    """Identity for 0, then sigma_1, sigma_2, sigma_3."""
    return _PAULI[index].copy()


def projector(vector: ArrayLike) -> Matrix:
    v = np.asarray(vector, dtype=np.complex128).reshape(-1)
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


def pauli_eigenprojector(index: int, sign: int) -> Matrix:
    """(1 + sign * sigma_index) / 2."""
    return (np.eye(2) + sign * _PAULI[index]) / 2.0


def maximally_entangled(d: int) -> PureState:
    """sum_j |j> (x) |j> / sqrt(d)."""
    return PureState.from_coefficients(np.eye(d) / math.sqrt(d))


def phi_plus() -> PureState:
    return maximally_entangled(2)


def reduced_state(state: DensityMatrix | PureState, keep: str = "A") -> DensityMatrix:
    """Partial trace over the other subsystem."""
    rho = state.density() if isinstance(state, PureState) else state
    d_a, d_b = rho.dims
    r = rho.entries.reshape(d_a, d_b, d_a, d_b)
    match keep:
        case "A":
            return DensityMatrix((d_a,), np.einsum("ijkj->ik", r))
        case "B":
            return DensityMatrix((d_b,), np.einsum("jijk->ik", r))
        case _:
            raise DimMismatch(f"Subsystem must be 'A' or 'B', got {keep!r}.")
