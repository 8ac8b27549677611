import numpy as np
import pytest

from qimsim.grid import Axis
from qimsim.optics import TransferMatrix


@pytest.fixture
def arm_grid() -> Axis:
    """2 mm arm grid with 1 um midpoint spacing."""
    return Axis.centered(2e-3, 2000)


@pytest.fixture
def mode_axis() -> Axis:
    """64 plane-wave modes on a symmetric axis up to 1e5 rad/m."""
    return Axis.centered(2e5, 64)


@pytest.fixture
def random_transfer():
    """
    Builds a random complex transfer matrix on a small symmetric mode axis.

    Usage:
        g = random_transfer(n_out=16, seed=3)
    """

    def _build(n_out: int = 16, n_modes: int = 32, seed: int = 0) -> TransferMatrix:
        rng = np.random.default_rng(seed)
        entries = rng.standard_normal((n_out, n_modes)) + 1j * rng.standard_normal(
            (n_out, n_modes)
        )
        return TransferMatrix(
            Axis.centered(1e-3, n_out), Axis.centered(2e4, n_modes), entries
        )

    return _build
