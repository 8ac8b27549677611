"""Deterministic per-realization random streams."""

from __future__ import annotations

import numpy as np


def realization_rng(seed: int, index: int) -> np.random.Generator:
    """Independent generator for realization ``index`` derived from ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def uniform_phases(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.uniform(0.0, 2.0 * np.pi, size=n)
