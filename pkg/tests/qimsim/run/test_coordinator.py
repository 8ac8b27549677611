import json
from datetime import UTC
from datetime import datetime
from pathlib import Path

import pytest
from freezegun import freeze_time

from qimsim.config import QimsimSettings
from qimsim.exceptions import BenchLoaderError
from qimsim.exceptions import BenchRunError
from qimsim.exceptions import SamplingViolation
from qimsim.io import lookup_serializer
from qimsim.optics import BucketMode
from qimsim.run import BenchRunCoordinator
from qimsim.run import RunConfig
from qimsim.run import Status


@pytest.fixture
def coordinator(tmp_path: Path) -> BenchRunCoordinator:
    """Coordinator writing into tmp_path with default project settings."""
    return BenchRunCoordinator(settings=QimsimSettings(output_directory=tmp_path))


@pytest.fixture
def minimal_bench(write_bench, minimal_bench_text: str) -> str:
    return str(write_bench("minimal.bench", minimal_bench_text))


def test_run_writes_pattern_and_metrics(
    coordinator: BenchRunCoordinator, minimal_bench: str, tmp_path: Path
) -> None:
    summary = coordinator.execute(RunConfig(bench=minimal_bench))

    assert summary.status is Status.SUCCESS
    assert summary.output_path == tmp_path / "minimal.csv"
    assert set(summary.artifacts) == {"coincidence", "singles"}

    table = lookup_serializer(".csv").load(summary.output_path)
    assert table.comments[0] == "qimsim pattern v1"
    assert f"bench: {minimal_bench}" in table.comments
    assert table.columns == ("x_m", "value")
    assert table.rows.shape == (64, 2)
    assert table.column("value").max() == pytest.approx(1.0)

    saved = json.loads((tmp_path / "minimal.metrics.json").read_text(encoding="utf-8"))
    assert saved["status"] == "success"
    assert saved["metrics"]["predicted_spacing"] == pytest.approx(1.404e-3)
    assert {"visibility", "fringe_spacing", "singles_visibility"} <= set(saved["metrics"])


def test_explicit_output_path(
    coordinator: BenchRunCoordinator, minimal_bench: str, tmp_path: Path
) -> None:
    out = tmp_path / "nested" / "fringes.csv"
    summary = coordinator.execute(RunConfig(bench=minimal_bench, out=out))
    assert out.is_file()
    assert Path(summary.artifacts["singles"]) == tmp_path / "nested" / "fringes.singles.csv"
    assert (tmp_path / "nested" / "fringes.metrics.json").is_file()


def test_reruns_are_byte_identical(
    coordinator: BenchRunCoordinator, minimal_bench: str, tmp_path: Path
) -> None:
    first = coordinator.execute(RunConfig(bench=minimal_bench, out=tmp_path / "a.csv"))
    second = coordinator.execute(RunConfig(bench=minimal_bench, out=tmp_path / "b.csv"))
    assert first.output_path.read_bytes() == second.output_path.read_bytes()


@freeze_time("2026-03-14 15:09:26")
def test_summary_timestamps(coordinator: BenchRunCoordinator, minimal_bench: str) -> None:
    summary = coordinator.execute(RunConfig(bench=minimal_bench))
    assert summary.start_time == datetime(2026, 3, 14, 15, 9, 26, tzinfo=UTC)
    assert summary.duration_seconds == 0.0
    assert summary.run_id.startswith("run_20260314_150926_")


@pytest.mark.parametrize(
    ("bench_seed", "flag_seed", "settings_seed", "expected"),
    [
        (None, None, 11, 11),
        (5, None, 11, 5),
        (5, 9, 11, 9),
    ],
    ids=["from-settings", "from-bench", "from-flag"],
)
def test_seed_precedence(
    write_bench,
    minimal_bench_text: str,
    tmp_path: Path,
    bench_seed: int | None,
    flag_seed: int | None,
    settings_seed: int,
    expected: int,
) -> None:
    source = "source randomphase realizations=4"
    if bench_seed is not None:
        source += f" seed={bench_seed}"
    path = write_bench("rp.bench", minimal_bench_text.replace("source spdc", source))
    coordinator = BenchRunCoordinator(
        settings=QimsimSettings(output_directory=tmp_path, seed=settings_seed)
    )

    summary = coordinator.execute(RunConfig(bench=str(path), seed=flag_seed))

    assert summary.configuration["seed"] == expected
    assert summary.configuration["realizations"] == 4
    assert {"closed_form", "stderr"} <= set(summary.artifacts)
    assert "klyshko_rms" in summary.metrics


def test_realizations_only_resolved_for_random_phase(
    coordinator: BenchRunCoordinator, minimal_bench: str
) -> None:
    summary = coordinator.execute(RunConfig(bench=minimal_bench, realizations=50))
    assert summary.configuration["realizations"] is None


@pytest.mark.parametrize(
    ("bench_line", "settings_bucket", "flag_bucket", "expected"),
    [
        ("detector bucket", BucketMode.AMPLITUDE, None, "amplitude"),
        ("detector bucket amplitude", BucketMode.INTENSITY, None, "amplitude"),
        ("detector bucket amplitude", BucketMode.INTENSITY, BucketMode.INTENSITY, "intensity"),
    ],
    ids=["settings-fill-plain-bucket", "bench-amplitude-kept", "flag-wins"],
)
def test_bucket_resolution(
    write_bench,
    minimal_bench_text: str,
    tmp_path: Path,
    bench_line: str,
    settings_bucket: BucketMode,
    flag_bucket: BucketMode | None,
    expected: str,
) -> None:
    text = minimal_bench_text.replace("detector farfield_point", bench_line)
    path = write_bench("bucket.bench", text)
    coordinator = BenchRunCoordinator(
        settings=QimsimSettings(output_directory=tmp_path, bucket=settings_bucket)
    )

    summary = coordinator.execute(RunConfig(bench=str(path), bucket=flag_bucket))

    assert summary.configuration["bucket"] == expected


def test_overrides_are_recorded(
    coordinator: BenchRunCoordinator, minimal_bench: str
) -> None:
    summary = coordinator.execute(
        RunConfig(bench=minimal_bench, overrides=("arm_b.elements.0.d = 0.9",))
    )
    assert summary.configuration["overrides"] == ["arm_b.elements.0.d = 0.9"]
    assert summary.metrics["predicted_spacing"] == pytest.approx(1.1 * 702e-9 / 5e-4)


def test_unknown_bench_fails_before_start(
    coordinator: BenchRunCoordinator, tmp_path: Path
) -> None:
    with pytest.raises(BenchRunError) as excinfo:
        coordinator.execute(RunConfig(bench=str(tmp_path / "nowhere.bench")))
    assert isinstance(excinfo.value.__cause__, BenchLoaderError)
    assert not list(tmp_path.glob("*.json"))


def test_numeric_failure_is_summarized(
    coordinator: BenchRunCoordinator, minimal_bench: str, tmp_path: Path
) -> None:
    with pytest.raises(BenchRunError) as excinfo:
        coordinator.execute(RunConfig(bench=minimal_bench, p_max=1e6))
    assert isinstance(excinfo.value.__cause__, SamplingViolation)

    saved = json.loads((tmp_path / "minimal.metrics.json").read_text(encoding="utf-8"))
    assert saved["status"] == "failed"
    assert "exceeds pi" in saved["error_message"]
    assert not (tmp_path / "minimal.csv").exists()


def test_summary_as_yaml(
    coordinator: BenchRunCoordinator, minimal_bench: str, tmp_path: Path
) -> None:
    coordinator.execute(RunConfig(bench=minimal_bench, summary_format="yaml"))

    assert not (tmp_path / "minimal.metrics.json").exists()
    saved = lookup_serializer(".yaml").load(tmp_path / "minimal.metrics.yaml")
    assert saved["status"] == "success"
    assert saved["metrics"]["predicted_spacing"] == pytest.approx(1.404e-3)


def test_summary_format_from_settings(minimal_bench: str, tmp_path: Path) -> None:
    settings = QimsimSettings(output_directory=tmp_path, summary_format="yaml")
    BenchRunCoordinator(settings=settings).execute(RunConfig(bench=minimal_bench))
    assert (tmp_path / "minimal.metrics.yaml").is_file()

    BenchRunCoordinator(settings=settings).execute(
        RunConfig(
            bench=minimal_bench, out=tmp_path / "flag.csv", summary_format="json"
        )
    )
    assert (tmp_path / "flag.metrics.json").is_file()


def test_point_array_in_arm_a_writes_map(
    coordinator: BenchRunCoordinator,
    write_bench,
    minimal_bench_text: str,
    tmp_path: Path,
) -> None:
    text = minimal_bench_text.replace(
        "detector farfield_point", "detector array min=-1e-3 max=1e-3 n=8"
    )
    summary = coordinator.execute(RunConfig(bench=str(write_bench("map.bench", text))))

    table = lookup_serializer(".csv").load(Path(summary.artifacts["map"]))
    assert table.comments[0] == "qimsim pattern v1"
    assert table.columns == ("x1_m", "x2_m", "value")
    assert table.rows.shape == (8 * 64, 3)
    marginal = lookup_serializer(".csv").load(summary.output_path)
    assert marginal.columns == ("x_m", "value")
