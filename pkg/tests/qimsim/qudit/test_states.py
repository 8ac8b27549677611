import numpy as np
import pytest

from qimsim.exceptions import DimMismatch
from qimsim.exceptions import InvalidState
from qimsim.qudit import DensityMatrix
from qimsim.qudit import Observable
from qimsim.qudit import PureState
from qimsim.qudit import expectation
from qimsim.qudit import pauli
from qimsim.qudit import phi_plus
from qimsim.qudit import random_observable
from qimsim.qudit import random_pure_state
from qimsim.qudit import reduced_state


def test_unnormalized_state_is_rejected() -> None:
    with pytest.raises(InvalidState) as excinfo:
        PureState((2, 2), [1.0, 1.0, 0.0, 0.0])
    assert "not 1" in str(excinfo.value)


def test_amplitudes_must_match_dims() -> None:
    with pytest.raises(DimMismatch):
        PureState((2, 3), [1.0, 0.0, 0.0, 0.0])


@pytest.mark.parametrize(
    "entries",
    [
        [[0.5, 0.5], [0.0, 0.5]],
        [[0.5, 0.0], [0.0, 0.4]],
        [[1.5, 0.0], [0.0, -0.5]],
    ],
    ids=["not-hermitian", "trace-below-one", "negative-eigenvalue"],
)
def test_invalid_density_matrices(entries: list) -> None:
    with pytest.raises(InvalidState):
        DensityMatrix((2,), entries)


def test_density_entries_are_read_only() -> None:
    rho = phi_plus().density()
    with pytest.raises(ValueError):
        rho.entries[0, 0] = 0.0


def test_pure_and_density_expectations_agree(rng: np.random.Generator) -> None:
    psi = random_pure_state((2, 3), rng)
    obs = random_observable(2, rng).tensor(random_observable(3, rng))
    assert expectation(psi, obs) == pytest.approx(expectation(psi.density(), obs), abs=1e-12)


def test_expectation_checks_dims(rng: np.random.Generator) -> None:
    with pytest.raises(DimMismatch):
        expectation(phi_plus(), random_observable(3, rng))


def test_phi_plus_marginals_are_maximally_mixed() -> None:
    for keep in ("A", "B"):
        np.testing.assert_allclose(reduced_state(phi_plus(), keep).entries, np.eye(2) / 2)


def test_phi_plus_correlations() -> None:
    psi = phi_plus()
    sx = Observable.of(pauli(1))
    sz = Observable.of(pauli(3))
    assert expectation(psi, sx.tensor(sx)) == pytest.approx(1.0)
    assert expectation(psi, sz.tensor(sz)) == pytest.approx(1.0)
    assert expectation(psi, sx.tensor(sz)) == pytest.approx(0.0, abs=1e-12)
