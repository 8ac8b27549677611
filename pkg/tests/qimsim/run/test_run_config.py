from pathlib import Path

import pytest
from pydantic import ValidationError

from qimsim.exceptions import ConfigLoaderError
from qimsim.optics import BucketMode
from qimsim.run import RunConfig
from qimsim.run import run_config_from_options


def test_defaults_leave_everything_unset() -> None:
    config = RunConfig(bench="fig3_ghost_interference")
    assert config.out is None
    assert config.seed is None
    assert config.raw is None
    assert config.overrides == ()


def test_options_are_coerced() -> None:
    config = run_config_from_options(
        bench="klyshko",
        out="results/klyshko.csv",
        seed="4",
        bucket="amplitude",
        overrides=("grid.n=128",),
    )
    assert config.out == Path("results/klyshko.csv")
    assert config.seed == 4
    assert config.bucket is BucketMode.AMPLITUDE


@pytest.mark.parametrize(
    "options",
    [
        {"out": "pattern.txt"},
        {"grid_n": 16},
        {"seed": -1},
        {"realizations": 0},
        {"overrides": ("grid.n",)},
        {"overrides": ("=3",)},
    ],
    ids=[
        "non-csv-output",
        "grid-too-small",
        "negative-seed",
        "no-realizations",
        "override-without-value",
        "override-without-key",
    ],
)
def test_invalid_options(options: dict) -> None:
    with pytest.raises(ConfigLoaderError) as excinfo:
        run_config_from_options(bench="fig3_ghost_interference", **options)
    assert "Invalid run options" in str(excinfo.value)


def test_config_is_frozen() -> None:
    config = RunConfig(bench="klyshko")
    with pytest.raises(ValidationError):
        config.seed = 3
