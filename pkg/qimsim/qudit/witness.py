"""The two-qubit witness construction and classical correlation predictions."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike
from numpy.typing import NDArray

from qimsim.exceptions import DimMismatch
from qimsim.exceptions import InvalidDistribution
from qimsim.qudit.sampling import random_separable
from qimsim.qudit.states import DensityMatrix
from qimsim.qudit.states import Observable
from qimsim.qudit.states import PureState
from qimsim.qudit.states import SeparableState
from qimsim.qudit.states import pauli_eigenprojector
from qimsim.qudit.states import phi_plus
from qimsim.sources.rng import realization_rng

WEIGHT_TOL = 1e-10
SIGNS = {"+": 1, "-": -1}


@dataclass(frozen=True, eq=False)
class WitnessSuite:
    witness: Observable
    tau0: DensityMatrix
    projectors: dict[str, Observable]
    phi_plus: PureState

    def projector(self, axis: int, signs: str) -> Observable:
        """P_axis^{ab} for signs like ``"+-"``."""
        return self.projectors[f"{axis}{signs}"]


def witness_suite() -> WitnessSuite:
    """
    Fixed two-qubit objects around the maximally entangled state.

    tau0 mixes the three pairwise commuting correlated projector pairs
    (P3++ + P3--), (P1++ + P1--) and (P2+- + P2-+) with weight 1/6 each, and
    W = (2/3)(1 - 3 tau0) separates Phi+ from every separable state.
    """
    projectors = {
        f"{axis}{a}{b}": Observable(
            (2, 2),
            np.kron(
                pauli_eigenprojector(axis, SIGNS[a]),
                pauli_eigenprojector(axis, SIGNS[b]),
            ),
        )
        for axis in (1, 2, 3)
        for a in SIGNS
        for b in SIGNS
    }
    correlated = ("3++", "3--", "1++", "1--", "2+-", "2-+")
    tau0 = sum(projectors[key].entries for key in correlated) / 6.0
    witness = (2.0 / 3.0) * (np.eye(4) - 3.0 * tau0)
    return WitnessSuite(
        witness=Observable((2, 2), witness),
        tau0=DensityMatrix((2, 2), tau0),
        projectors=projectors,
        phi_plus=phi_plus(),
    )


@dataclass(frozen=True, eq=False)
class ProductEnsemble:
    """Weights p_u with local states sigma_A^u and sigma_B^u."""

    weights: NDArray[np.float64]
    states_a: tuple[DensityMatrix, ...]
    states_b: tuple[DensityMatrix, ...]

    def __post_init__(self) -> None:
        weights = np.asarray(self.weights, dtype=np.float64)
        if not (weights.size == len(self.states_a) == len(self.states_b)):
            raise DimMismatch("Ensemble weights and local states differ in length.")
        if weights.size == 0 or np.any(weights < -WEIGHT_TOL):
            raise InvalidDistribution("Ensemble weights must be nonnegative and nonempty.")
        if abs(weights.sum() - 1.0) > WEIGHT_TOL:
            raise InvalidDistribution(f"Ensemble weights sum to {weights.sum():.12g}, not 1.")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def of(
        cls, terms: Sequence[tuple[float, ArrayLike, ArrayLike]]
    ) -> ProductEnsemble:
        """From (p_u, sigma_A^u, sigma_B^u) triples of plain matrices."""
        weights = [w for w, _, _ in terms]
        states_a = tuple(DensityMatrix((np.shape(a)[0],), a) for _, a, _ in terms)
        states_b = tuple(DensityMatrix((np.shape(b)[0],), b) for _, _, b in terms)
        return cls(np.array(weights), states_a, states_b)

    @classmethod
    def from_separable(cls, state: SeparableState) -> ProductEnsemble:
        return cls.of(state.terms)


def classical_terms(
    ensemble: ProductEnsemble, obs_a: Observable, obs_b: Observable
) -> NDArray[np.float64]:
    """Summands p_u tr(O_A sigma_A^u) tr(O_B sigma_B^u)."""
    local_a = np.array(
        [np.trace(obs_a.entries @ s.entries).real for s in ensemble.states_a]
    )
    local_b = np.array(
        [np.trace(obs_b.entries @ s.entries).real for s in ensemble.states_b]
    )
    return ensemble.weights * local_a * local_b


def classical_prediction(
    ensemble: ProductEnsemble, obs_a: Observable, obs_b: Observable
) -> float:
    """Correlation a classically correlated ensemble predicts for O_A (x) O_B."""
    return float(classical_terms(ensemble, obs_a, obs_b).sum())


def witness_sweep(
    n: int, seed: int, suite: WitnessSuite | None = None
) -> NDArray[np.float64]:
    """
    tr(W tau) for ``n`` random two-qubit separable states.

    Sample ``i`` draws from its own generator derived from ``(seed, i)``.

    Raises:
        InvalidDistribution: If ``n`` is below one.
    """
    if n < 1:
        raise InvalidDistribution("A sweep needs at least one sample.")
    witness = (suite or witness_suite()).witness.entries
    values = np.empty(n)
    for index in range(n):
        tau = random_separable((2, 2), realization_rng(seed, index))
        values[index] = np.trace(witness @ tau.entries).real
    return values
