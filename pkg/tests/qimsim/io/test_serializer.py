from pathlib import Path

import numpy as np
import pytest

from qimsim.exceptions import SerializerError
from qimsim.io import CsvTable
from qimsim.io import lookup_serializer


def test_csv_layout(tmp_path: Path) -> None:
    table = CsvTable(
        ("x2", "rate"),
        np.array([[-1e-3, 0.25], [0.0, 1.0]]),
        ("qimsim pattern v1", "bench = fig3_ghost_interference"),
    )
    path = tmp_path / "out" / "pattern.csv"

    lookup_serializer(path).dump(table, path)

    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[:3] == [
        "# qimsim pattern v1",
        "# bench = fig3_ghost_interference",
        "x2,rate",
    ]
    assert lines[3] == "-0.001,0.25"
    loaded = lookup_serializer(".csv").load(path)
    assert loaded.columns == ("x2", "rate")
    np.testing.assert_array_equal(loaded.column("rate"), [0.25, 1.0])
    assert loaded.comments == table.comments


def test_csv_needs_a_table(tmp_path: Path) -> None:
    with pytest.raises(SerializerError) as excinfo:
        lookup_serializer("csv").dump({"a": 1}, tmp_path / "bad.csv")
    assert "expects a CsvTable" in str(excinfo.value)


@pytest.mark.parametrize(
    ("key", "name"),
    [
        (Path("metrics.json"), "json"),
        (Path("run.YAML"), "yaml"),
        ("yml", "yaml"),
        (".txt", "text"),
        (Path("fringes.bench"), "text"),
    ],
    ids=["json-path", "upper-case-suffix", "bare-suffix", "dotted-suffix", "bench-file"],
)
def test_lookup_by_suffix(key, name: str) -> None:
    assert lookup_serializer(key).name == name


def test_unknown_suffix() -> None:
    assert lookup_serializer(Path("pattern.parquet")) is None


def test_lookup_rejects_other_keys() -> None:
    with pytest.raises(TypeError):
        lookup_serializer(3)


def test_json_and_yaml_dump(tmp_path: Path) -> None:
    data = {"status": "success", "metrics": {"visibility": 0.97}}
    for suffix in (".json", ".yaml"):
        path = tmp_path / f"summary{suffix}"
        serializer = lookup_serializer(path)
        serializer.dump(data, path)
        assert serializer.load(path) == data


def test_missing_file_is_not_wrapped(tmp_path: Path) -> None:
    with pytest.raises(FileNotFoundError):
        lookup_serializer(".json").load(tmp_path / "absent.json")


def test_text_round_trip(tmp_path: Path) -> None:
    path = tmp_path / "copy.bench"
    text = "pump wavelength_nm=351\nsource spdc\n"
    serializer = lookup_serializer(path)
    serializer.dump(text, path)
    assert serializer.load(path) == text
