from __future__ import annotations

import logging
from typing import Any

import pipefunc

from qimsim.exceptions import QimsimError
from qimsim.run import steps

logger = logging.getLogger(__name__)

TERMINAL_OUTPUT = "metrics"


def build_pipeline() -> pipefunc.Pipeline:
    """bench -> wave context and axes -> transfer matrices -> source -> patterns -> metrics."""
    funcs = [
        pipefunc.PipeFunc(steps.wave_context, output_name="ctx"),
        pipefunc.PipeFunc(steps.axes, output_name=("grid", "mode_axis")),
        pipefunc.PipeFunc(steps.transfer_a, output_name="g_a"),
        pipefunc.PipeFunc(steps.transfer_b, output_name="g_b"),
        pipefunc.PipeFunc(steps.source, output_name="source"),
        pipefunc.PipeFunc(steps.patterns, output_name="patterns"),
        pipefunc.PipeFunc(steps.metrics, output_name=TERMINAL_OUTPUT),
    ]
    return pipefunc.Pipeline(funcs)


class PipelineExecutor:
    """Executes the run pipeline and returns every intermediate output."""

    def execute(
        self, pipeline: pipefunc.Pipeline, inputs: dict[str, Any], name: str
    ) -> dict[str, Any]:
        logger.info(f"Executing pipeline: {name}")
        logger.debug(f"Pipeline inputs: {sorted(inputs)}")
        try:
            results = pipeline.run(TERMINAL_OUTPUT, full_output=True, kwargs=inputs)
        except QimsimError:
            raise
        except Exception as e:
            # pipefunc may wrap errors raised inside a step
            if isinstance(e.__cause__, QimsimError):
                raise e.__cause__ from e
            raise
        logger.info(f"Pipeline '{name}' execution completed.")
        return results
