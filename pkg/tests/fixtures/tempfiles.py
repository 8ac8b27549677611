from pathlib import Path

import pytest

MINIMAL_BENCH = """\
pump wavelength_nm=351
source spdc
grid n=256 extent=2e-3 p_max=2e4 modes=32

arm A:
  free d=0.2
  mask double_slit d=5e-4 a=1e-4
  detector farfield_point

arm B:
  free d=0.8
  detector array min=-3e-3 max=3e-3 n=64
"""


@pytest.fixture
def minimal_bench_text() -> str:
    """A small, fast ghost-interference bench."""
    return MINIMAL_BENCH


@pytest.fixture
def write_bench(tmp_path: Path):
    """
    Writes bench text to a file in tmp_path.

    Usage:
        path = write_bench("fringes.bench", text)
    """

    def _writer(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _writer


@pytest.fixture
def write_pyproject(tmp_path: Path):
    """
    Writes a pyproject.toml with the given [tool.qimsim] body into tmp_path.

    Usage:
        path = write_pyproject('seed = 3')
    """

    def _writer(body: str) -> Path:
        path = tmp_path / "pyproject.toml"
        path.write_text(f"[tool.qimsim]\n{body}\n", encoding="utf-8")
        return path

    return _writer
