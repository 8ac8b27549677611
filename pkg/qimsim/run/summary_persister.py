import logging
from pathlib import Path

from qimsim.exceptions import SerializerError
from qimsim.exceptions import SummaryPersistenceError
from qimsim.io import lookup_serializer
from qimsim.run.summary_model import Summary

logger = logging.getLogger(__name__)


class SummaryPersister:
    """Persists a run summary next to its pattern, as JSON or YAML."""

    def save(self, summary: Summary, summary_format: str = "json") -> Path:
        path = summary.metrics_path(summary_format)
        logger.info(f"Saving run summary: {path}")

        serializer = lookup_serializer(path)
        if serializer is None:
            raise SummaryPersistenceError(
                f"No serializer for summary format '{summary_format}'"
            )
        try:
            serializer.dump(summary.model_dump(mode="json"), path)
        except SerializerError as e:
            logger.exception(f"Failed to write summary: {path}")
            raise SummaryPersistenceError(f"Could not save summary to {path}") from e

        return path
