import pytest

from qimsim.bench import SourceKind
from qimsim.bench import parse
from qimsim.bench.parser import LENS_MESSAGE
from qimsim.exceptions import BenchParseError
from qimsim.optics import DoubleSlit
from qimsim.optics import FarFieldPoint
from qimsim.optics import FreeSpace
from qimsim.optics import PointArray
from qimsim.optics import ThinLens


def replace_line(text: str, old: str, new: str) -> str:
    assert old in text
    return text.replace(old, new, 1)


def test_parse_minimal_bench(minimal_bench_text: str) -> None:
    bench = parse(minimal_bench_text)

    assert bench.pump.wavelength_nm == 351.0
    assert bench.source.kind is SourceKind.SPDC
    assert bench.grid.n == 256
    assert bench.grid.modes == 32
    assert bench.arm_a.elements[0] == FreeSpace(d=0.2)
    assert bench.arm_a.elements[1].profile == DoubleSlit(d=5e-4, a=1e-4)
    assert bench.arm_a.detector == FarFieldPoint()
    assert bench.arm_b.detector == PointArray(x_min=-3e-3, x_max=3e-3, n=64)


def test_comments_and_blank_lines_are_ignored(minimal_bench_text: str) -> None:
    noisy = "# header comment\n\n" + minimal_bench_text.replace(
        "free d=0.2", "free d=0.2   # to the slits\n\n"
    )
    assert parse(noisy) == parse(minimal_bench_text)


def test_missing_detector_names_the_arm(minimal_bench_text: str) -> None:
    text = replace_line(minimal_bench_text, "  detector farfield_point\n", "")
    with pytest.raises(BenchParseError) as excinfo:
        parse(text)
    assert "arm A has no detector" in str(excinfo.value)
    assert excinfo.value.line == 5


def test_missing_arm_points_at_pump(minimal_bench_text: str) -> None:
    text = minimal_bench_text.split("arm B:")[0]
    with pytest.raises(BenchParseError) as excinfo:
        parse(text)
    assert excinfo.value.message == "bench has no arm B"
    assert (excinfo.value.line, excinfo.value.column) == (1, 1)


def test_negative_focal_length_needs_flag(minimal_bench_text: str) -> None:
    text = replace_line(minimal_bench_text, "  free d=0.8\n", "  free d=0.8\n  lens f=-0.1\n")

    with pytest.raises(BenchParseError) as excinfo:
        parse(text)
    assert excinfo.value.message == LENS_MESSAGE
    assert excinfo.value.token == "-0.1"
    assert excinfo.value.column == 10

    bench = parse(text, allow_diverging=True)
    assert bench.arm_b.elements[1] == ThinLens(f=-0.1)


def test_zero_focal_length_is_always_rejected(minimal_bench_text: str) -> None:
    text = replace_line(minimal_bench_text, "  free d=0.8\n", "  free d=0.8\n  lens f=0\n")
    with pytest.raises(BenchParseError) as excinfo:
        parse(text, allow_diverging=True)
    assert excinfo.value.message == LENS_MESSAGE


@pytest.mark.parametrize(
    ("old", "new", "message", "token"),
    [
        ("source spdc", "source laser", "source must be one of", "laser"),
        ("free d=0.2", "free d=-0.2", "'d' must be positive", "-0.2"),
        ("free d=0.2", "free d=0.2 d=0.3", "duplicate key 'd'", "d"),
        ("free d=0.2", "free x=0.2", "unknown key 'x' for 'free'", "x"),
        ("free d=0.2", "free d=abc", "'d' expects a number", "abc"),
        ("free d=0.2", "warp d=0.2", "unknown statement 'warp'", "warp"),
        ("n=64", "n=6.4", "'n' expects an integer", "6.4"),
        ("double_slit", "triple_slit", "unknown mask kind 'triple_slit'", "triple_slit"),
        ("arm B:", "arm C:", "arm header must read", "C"),
    ],
    ids=[
        "bad-source",
        "negative-distance",
        "duplicate-key",
        "unknown-key",
        "not-a-number",
        "unknown-statement",
        "not-an-integer",
        "unknown-mask",
        "bad-arm-name",
    ],
)
def test_error_points_at_offending_token(
    minimal_bench_text: str, old: str, new: str, message: str, token: str
) -> None:
    text = replace_line(minimal_bench_text, old, new)
    with pytest.raises(BenchParseError) as excinfo:
        parse(text)

    error = excinfo.value
    assert message in error.message
    assert error.token == token
    line = text.splitlines()[error.line - 1]
    assert line[error.column - 1 :].startswith(token)
    assert str(error).startswith(f"{error.line}:{error.column}: ")


def test_bench_must_start_with_pump(minimal_bench_text: str) -> None:
    text = "source spdc\n" + minimal_bench_text.replace("source spdc\n", "")
    with pytest.raises(BenchParseError) as excinfo:
        parse(text)
    assert "must start with 'pump" in excinfo.value.message


def test_empty_bench() -> None:
    with pytest.raises(BenchParseError) as excinfo:
        parse("# nothing here\n")
    assert "empty bench" in str(excinfo.value)


def test_element_after_detector(minimal_bench_text: str) -> None:
    text = minimal_bench_text + "  free d=0.1\n"
    with pytest.raises(BenchParseError) as excinfo:
        parse(text)
    assert "after the detector of arm B" in excinfo.value.message


def test_classical_source_requires_epsilon(minimal_bench_text: str) -> None:
    text = replace_line(minimal_bench_text, "source spdc", "source classical")
    with pytest.raises(BenchParseError) as excinfo:
        parse(text)
    assert "requires 'epsilon='" in excinfo.value.message


def test_gaussian_profile_requires_sigma(minimal_bench_text: str) -> None:
    text = replace_line(minimal_bench_text, "source spdc", "source spdc profile=gaussian")
    with pytest.raises(BenchParseError) as excinfo:
        parse(text)
    assert "sigma" in excinfo.value.message


def test_relative_mask_file_resolves_against_base_dir(
    minimal_bench_text: str, tmp_path
) -> None:
    text = replace_line(
        minimal_bench_text, "mask double_slit d=5e-4 a=1e-4", "mask file=slits.csv"
    )
    bench = parse(text, base_dir=tmp_path)
    assert bench.arm_a.first_mask().profile.path == tmp_path / "slits.csv"


def test_quoted_mask_path_keeps_spaces(minimal_bench_text: str, tmp_path) -> None:
    text = replace_line(
        minimal_bench_text,
        "mask double_slit d=5e-4 a=1e-4",
        'mask file="my masks/slits #2.csv"  # measured',
    )
    bench = parse(text, base_dir=tmp_path)
    expected = tmp_path / "my masks" / "slits #2.csv"
    assert bench.arm_a.first_mask().profile.path == expected
