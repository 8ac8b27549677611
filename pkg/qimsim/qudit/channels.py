from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from numpy.typing import NDArray

from qimsim.exceptions import DimMismatch
from qimsim.exceptions import NotTracePreserving
from qimsim.qudit.states import DensityMatrix
from qimsim.qudit.states import Observable

NORMALIZATION_TOL = 1e-10

OperatorPair = tuple[NDArray[np.complex128], NDArray[np.complex128]]


@dataclass(frozen=True, eq=False)
class LocalChannel:
    """Kraus channel whose operators are products V_k = A_k (x) B_k."""

    ops: tuple[OperatorPair, ...]

    def __post_init__(self) -> None:
        if not self.ops:
            raise NotTracePreserving("A channel needs at least one Kraus operator.")
        pairs = tuple(
            (np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))
            for a, b in self.ops
        )
        shapes = {(a.shape, b.shape) for a, b in pairs}
        if len(shapes) != 1:
            raise DimMismatch(f"Kraus factors have inconsistent shapes: {sorted(shapes)}.")
        object.__setattr__(self, "ops", pairs)
        total = sum(v.conj().T @ v for v in self.kraus())
        deviation = np.max(np.abs(total - np.eye(total.shape[0])))
        if deviation > NORMALIZATION_TOL:
            raise NotTracePreserving(
                f"sum V_k^dagger V_k deviates from the identity by {deviation:.3g}."
            )

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[ArrayLike, ArrayLike]]) -> LocalChannel:
        return cls(tuple((np.asarray(a), np.asarray(b)) for a, b in pairs))

    @classmethod
    def identity(cls, dims: tuple[int, int]) -> LocalChannel:
        return cls(((np.eye(dims[0]), np.eye(dims[1])),))

    @property
    def dims(self) -> tuple[int, int]:
        a, b = self.ops[0]
        return a.shape[1], b.shape[1]

    def kraus(self) -> list[NDArray[np.complex128]]:
        return [np.kron(a, b) for a, b in self.ops]


def _check_dims(channel: LocalChannel, dims: tuple[int, ...]) -> None:
    if tuple(dims) != channel.dims:
        raise DimMismatch(f"Channel acts on {channel.dims}, operand has dims {dims}.")


def apply_channel(channel: LocalChannel, rho: DensityMatrix) -> DensityMatrix:
    """Schrodinger picture: sum_k V_k rho V_k^dagger."""
    _check_dims(channel, rho.dims)
    out = sum(v @ rho.entries @ v.conj().T for v in channel.kraus())
    return DensityMatrix(rho.dims, (out + out.conj().T) / 2.0)


def heisenberg(channel: LocalChannel, obs: Observable) -> Observable:
    """Heisenberg picture: sum_k V_k^dagger O V_k."""
    _check_dims(channel, obs.dims)
    out = sum(v.conj().T @ obs.entries @ v for v in channel.kraus())
    return Observable(obs.dims, (out + out.conj().T) / 2.0)


def local_dephasing(dims: tuple[int, int], basis: ArrayLike | None = None) -> LocalChannel:
    """Projective dephasing of subsystem A in ``basis`` (columns; computational by default)."""
    d_a, d_b = dims
    vectors = np.eye(d_a) if basis is None else np.asarray(basis, dtype=np.complex128)
    return LocalChannel.from_pairs(
        [(np.outer(v, v.conj()), np.eye(d_b)) for v in vectors.T]
    )
