import contextlib
import logging
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from qimsim.bench import BenchLoader
from qimsim.bench import BenchModel
from qimsim.bench import SourceKind
from qimsim.bench import apply_override
from qimsim.config import QimsimSettings
from qimsim.config import load_settings
from qimsim.console.reporter import ConsoleReporter
from qimsim.exceptions import BenchRunError
from qimsim.exceptions import ConfigLoaderError
from qimsim.optics import Bucket
from qimsim.run.artifact_persister import ArtifactPersister
from qimsim.run.pipeline import PipelineExecutor
from qimsim.run.pipeline import build_pipeline
from qimsim.run.run_config import RunConfig
from qimsim.run.state_tracker import RunStateTracker
from qimsim.run.summary_model import Status
from qimsim.run.summary_model import Summary
from qimsim.run.summary_persister import SummaryPersister

logger = logging.getLogger(__name__)


class BenchRunCoordinator:
    """
    Orchestrates one bench run, from loading the bench to persisting its
    patterns, metrics and summary.
    """

    def __init__(
        self,
        settings: QimsimSettings | None = None,
        pipeline_executor: PipelineExecutor | None = None,
        artifact_persister: ArtifactPersister | None = None,
        summary_persister: SummaryPersister | None = None,
        reporter: ConsoleReporter | None = None,
        project_config_path: Path | None = None,
    ) -> None:
        self.settings = settings or load_settings(project_config_path)
        self.pipeline_executor = pipeline_executor or PipelineExecutor()
        self.artifact_persister = artifact_persister or ArtifactPersister()
        self.summary_persister = summary_persister or SummaryPersister()
        self.reporter = reporter

    def execute(self, config: RunConfig) -> Summary:
        """
        Runs ``config`` and returns its summary.

        Raises:
            BenchRunError: For any failure; the original error is its ``__cause__``.
        """
        tracker = RunStateTracker()
        summary: Summary | None = None
        summary_format = self._pick(config.summary_format, self.settings.summary_format)

        try:
            bench = self._load_bench(config)
            configuration = self._resolve(config, bench)
            output_path = self._output_path(config)
            tracker.start_run(config.bench, output_path)
            tracker.update_configuration(configuration)
            summary = tracker.get_summary()

            inputs = {
                "bench": bench,
                "seed": configuration["seed"],
                "realizations": configuration["realizations"] or 1,
                "raw": configuration["raw"],
            }
            results = self._execute_pipeline(inputs, config.bench)
            tracker.update_metrics(results["metrics"])

            artifacts = self._persist_artifacts(
                results["patterns"], output_path, configuration
            )
            tracker.update_artifacts(artifacts)
            tracker.complete_run(Status.SUCCESS)

        except Exception as e:
            logger.debug(f"Run '{tracker.run_id}' failed: {e}", exc_info=True)
            summary = self._handle_failure(e, tracker)
            raise BenchRunError(f"Run of '{config.bench}' failed: {e}") from e

        finally:
            self._finalize(summary, tracker.run_id, summary_format)

        return summary

    def _load_bench(self, config: RunConfig) -> BenchModel:
        allow_diverging = self._pick(config.allow_diverging, self.settings.allow_diverging)
        with self._report_status(f"Loading bench {config.bench}..."):
            bench = BenchLoader(allow_diverging).load(config.bench)
            flags = {
                "grid.n": config.grid_n,
                "grid.p_max": config.p_max,
                "source.realizations": config.realizations,
            }
            for path, value in flags.items():
                if value is not None:
                    bench = apply_override(bench, path, value, allow_diverging)
            for item in config.overrides:
                key, _, value = item.partition("=")
                bench = apply_override(bench, key.strip(), value.strip(), allow_diverging)
            return self._apply_bucket(bench, config, allow_diverging)

    def _apply_bucket(
        self, bench: BenchModel, config: RunConfig, allow_diverging: bool
    ) -> BenchModel:
        detector = bench.arm_a.detector
        if not isinstance(detector, Bucket):
            if config.bucket is not None:
                logger.warning("--bucket ignored: arm A does not end in a bucket")
            return bench
        # A plain 'detector bucket' line leaves the mode to the project settings.
        mode = config.bucket or (
            detector.mode
            if detector.mode.value == "amplitude"
            else self.settings.bucket
        )
        if mode == detector.mode:
            return bench
        return apply_override(bench, "arm_a.detector.mode", mode.value, allow_diverging)

    def _resolve(self, config: RunConfig, bench: BenchModel) -> dict[str, Any]:
        """Resolved options, flag over bench over project settings."""
        grid = bench.grid
        seed = self._pick(config.seed, bench.seed, self.settings.seed)
        realizations = None
        if bench.source.kind is SourceKind.RANDOMPHASE:
            realizations = self._pick(
                config.realizations, bench.source.realizations, self.settings.realizations
            )
        detector = bench.arm_a.detector
        return {
            "bench": config.bench,
            "source": bench.source.kind.value,
            "grid": (
                f"n={grid.n} extent={grid.extent!r} "
                f"p_max={grid.p_max!r} modes={grid.modes}"
            ),
            "seed": seed,
            "realizations": realizations,
            "bucket": detector.mode.value if isinstance(detector, Bucket) else None,
            "raw": self._pick(config.raw, self.settings.raw),
            "overrides": list(config.overrides),
        }

    def _output_path(self, config: RunConfig) -> Path:
        if config.out is not None:
            return config.out
        return self.settings.output_directory / f"{Path(config.bench).stem}.csv"

    def _execute_pipeline(self, inputs: dict[str, Any], name: str) -> dict[str, Any]:
        with self._report_status("Computing transfer matrices and patterns..."):
            return self.pipeline_executor.execute(build_pipeline(), inputs, name)

    def _persist_artifacts(
        self, patterns: Any, output_path: Path, configuration: dict[str, Any]
    ) -> dict[str, str]:
        with self._report_status("Persisting artifacts..."):
            return self.artifact_persister.persist(patterns, output_path, configuration)

    def _handle_failure(self, error: Exception, tracker: RunStateTracker) -> Summary | None:
        if tracker.started:
            tracker.complete_run(Status.FAILED, str(error))
            return tracker.get_summary()
        return None

    def _finalize(
        self, summary: Summary | None, run_id: str, summary_format: str
    ) -> None:
        if not summary:
            logger.debug(f"No summary for run '{run_id}'; nothing to save")
            return

        try:
            with self._report_status("Saving run summary..."):
                self.summary_persister.save(summary, summary_format)
        except Exception as e:
            logger.error(f"Failed to save summary for run '{run_id}': {e}", exc_info=True)

        if self.reporter:
            if summary.metrics:
                self.reporter.display_metrics_table(summary.metrics)
            if summary.artifacts:
                self.reporter.display_outputs_table(summary.artifacts)
            self.reporter.display_run_summary_panel(summary)

    def _report_status(self, message: str) -> contextlib.AbstractContextManager:
        if self.reporter:
            return self.reporter.status(message)
        return contextlib.nullcontext()

    @staticmethod
    def _pick(*candidates: Any) -> Any:
        return next((c for c in candidates if c is not None), None)


def run_config_from_options(**options: Any) -> RunConfig:
    """
    Raises:
        ConfigLoaderError: If the options do not form a valid run configuration.
    """
    try:
        return RunConfig(**options)
    except ValidationError as e:
        raise ConfigLoaderError(f"Invalid run options: {e}") from e
