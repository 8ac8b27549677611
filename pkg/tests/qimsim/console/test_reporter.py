import io
import logging
from pathlib import Path

import pytest
from rich.console import Console

import qimsim.console
from qimsim.console import set_verbosity
from qimsim.console.logging import QUIET_OPTICS_FILTER
from qimsim.console.reporter import ConsoleReporter
from qimsim.run import Status
from qimsim.run import Summary


@pytest.fixture
def reporter() -> ConsoleReporter:
    return ConsoleReporter(Console(file=io.StringIO(), width=120, record=True))


def test_metrics_table(reporter: ConsoleReporter) -> None:
    reporter.display_metrics_table({"visibility": 0.987654321, "fringe_spacing": None})
    text = reporter.console.export_text()
    assert "Metrics" in text
    assert "0.987654" in text
    assert "n/a" in text


def test_summary_panel_shows_error(reporter: ConsoleReporter) -> None:
    summary = Summary(
        run_id="run_1",
        bench="klyshko",
        status=Status.FAILED,
        output_path=Path("klyshko.csv"),
        error_message="phase step 7.6 rad exceeds pi",
    )
    reporter.display_run_summary_panel(summary)
    text = reporter.console.export_text()
    assert "Run Summary: FAILED" in text
    assert "exceeds pi" in text


def test_empty_outputs(reporter: ConsoleReporter) -> None:
    reporter.display_outputs_table({})
    assert "No outputs were persisted." in reporter.console.export_text()


def test_quiet_optics_filter() -> None:
    def record(name: str, level: int) -> logging.LogRecord:
        return logging.LogRecord(name, level, __file__, 1, "msg", None, None)

    assert not QUIET_OPTICS_FILTER.filter(record("qimsim.optics.transfer", logging.DEBUG))
    assert QUIET_OPTICS_FILTER.filter(record("qimsim.optics.transfer", logging.WARNING))
    assert QUIET_OPTICS_FILTER.filter(record("qimsim.run.pipeline", logging.DEBUG))


def test_verbosity_levels() -> None:
    root = logging.getLogger()
    handler = qimsim.console._handler
    try:
        set_verbosity(1)
        assert root.level == logging.DEBUG
        assert QUIET_OPTICS_FILTER in handler.filters
        set_verbosity(2)
        assert QUIET_OPTICS_FILTER not in handler.filters
    finally:
        set_verbosity(0)
    assert root.level == logging.WARNING
