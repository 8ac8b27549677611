"""Random states, operators and channels for property sweeps."""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from qimsim.qudit.channels import LocalChannel
from qimsim.qudit.states import Observable
from qimsim.qudit.states import PureState
from qimsim.qudit.states import SeparableState
from qimsim.qudit.states import maximally_entangled
from qimsim.qudit.states import projector

MAX_SEPARABLE_TERMS = 8


def _ginibre(rng: np.random.Generator, rows: int, cols: int) -> NDArray[np.complex128]:
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_vector(rng: np.random.Generator, d: int) -> NDArray[np.complex128]:
    """Haar-random unit vector in C^d."""
    v = _ginibre(rng, d, 1)[:, 0]
    return v / np.linalg.norm(v)


def random_pure_state(dims: tuple[int, int], rng: np.random.Generator) -> PureState:
    return PureState(dims, random_vector(rng, dims[0] * dims[1]))


def random_unitary(d: int, rng: np.random.Generator) -> NDArray[np.complex128]:
    """Haar-random unitary from the QR decomposition with the phase fix on R."""
    q, r = np.linalg.qr(_ginibre(rng, d, d))
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases[np.newaxis, :]


def random_operator(d: int, rng: np.random.Generator) -> NDArray[np.complex128]:
    return _ginibre(rng, d, d)


def random_observable(d: int, rng: np.random.Generator) -> Observable:
    g = _ginibre(rng, d, d)
    return Observable.of((g + g.conj().T) / 2.0)


def random_commuting_family(
    d: int, rng: np.random.Generator, size: int = 2
) -> list[Observable]:
    """Observables diagonal in one shared random basis."""
    u = random_unitary(d, rng)
    return [
        Observable.of(u @ np.diag(rng.standard_normal(d)) @ u.conj().T)
        for _ in range(size)
    ]


def random_maximally_entangled(d: int, rng: np.random.Generator) -> PureState:
    """(U (x) V) applied to sum_j |jj> / sqrt(d) with Haar-random U and V."""
    local = np.kron(random_unitary(d, rng), random_unitary(d, rng))
    return PureState((d, d), local @ maximally_entangled(d).amplitudes)


def random_separable(
    dims: tuple[int, int],
    rng: np.random.Generator,
    max_terms: int = MAX_SEPARABLE_TERMS,
) -> SeparableState:
    """Dirichlet-weighted mixture of Haar-random product pure states."""
    n_terms = int(rng.integers(1, max_terms + 1))
    weights = rng.dirichlet(np.ones(n_terms))
    terms = [
        (
            float(w),
            projector(random_vector(rng, dims[0])),
            projector(random_vector(rng, dims[1])),
        )
        for w in weights
    ]
    return SeparableState.from_terms(dims, terms)


def _random_kraus(d: int, n_kraus: int, rng: np.random.Generator) -> list[NDArray]:
    # Stacked Kraus operators form an isometry C^d -> C^(n d).
    q, _ = np.linalg.qr(_ginibre(rng, n_kraus * d, d))
    return [q[k * d : (k + 1) * d, :] for k in range(n_kraus)]


def random_channel(
    dims: tuple[int, int], rng: np.random.Generator, n_kraus: int = 2
) -> LocalChannel:
    """Product of independent random channels on A and on B."""
    kraus_a = _random_kraus(dims[0], n_kraus, rng)
    kraus_b = _random_kraus(dims[1], n_kraus, rng)
    return LocalChannel(tuple((a, b) for a in kraus_a for b in kraus_b))
