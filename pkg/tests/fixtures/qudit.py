import numpy as np
import pytest

from qimsim.qudit import WitnessSuite
from qimsim.qudit import witness_suite


@pytest.fixture
def rng() -> np.random.Generator:
    """Fixed generator so random-state sweeps are reproducible."""
    return np.random.default_rng(20240501)


@pytest.fixture(scope="session")
def suite() -> WitnessSuite:
    return witness_suite()
