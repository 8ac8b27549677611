import logging
import uuid
from datetime import UTC
from datetime import datetime
from pathlib import Path
from typing import Any

from qimsim.run.summary_model import Status
from qimsim.run.summary_model import Summary

logger = logging.getLogger(__name__)


def generate_run_id(prefix: str = "run") -> str:
    timestamp = datetime.now(UTC).strftime("%Y%m%d_%H%M%S")
    return f"{prefix}_{timestamp}_{uuid.uuid4().hex[:6]}"


class RunStateTracker:
    """Tracks state and metadata for a single bench run."""

    def __init__(self, run_id: str | None = None) -> None:
        self._run_id = run_id or generate_run_id()
        self._summary: Summary | None = None

    def start_run(self, bench: str, output_path: Path) -> None:
        if self._summary:
            logger.warning(f"Run '{self._run_id}' already started; reinitializing.")

        self._summary = Summary(
            run_id=self._run_id,
            bench=bench,
            output_path=output_path,
            status=Status.RUNNING,
            start_time=datetime.now(UTC),
        )
        logger.info(f"Run started: {self._run_id} ({bench})")

    def complete_run(self, status: Status, error: str | None = None) -> None:
        summary = self._require_summary()
        summary.status = status
        summary.end_time = datetime.now(UTC)
        summary.error_message = error

        duration = summary.duration_seconds
        msg = f"Run '{self._run_id}' finished with {status.value}"
        if duration is not None:
            msg += f" in {duration:.2f}s"
        logger.info(msg)

    def update_configuration(self, configuration: dict[str, Any]) -> None:
        self._require_summary().configuration = configuration
        logger.debug(f"Configuration recorded for {self._run_id}")

    def update_metrics(self, metrics: dict[str, float | None]) -> None:
        self._require_summary().metrics = metrics
        logger.debug(f"Metrics recorded for {self._run_id}")

    def update_artifacts(self, artifacts: dict[str, str]) -> None:
        self._require_summary().artifacts = artifacts
        logger.info(f"Artifacts recorded for {self._run_id}")

    def get_summary(self) -> Summary:
        return self._require_summary()

    @property
    def started(self) -> bool:
        return self._summary is not None

    @property
    def run_id(self) -> str:
        return self._run_id

    def _require_summary(self) -> Summary:
        if not self._summary:
            raise RuntimeError("Run not started. Call start_run() first.")
        return self._summary
