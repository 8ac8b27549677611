from __future__ import annotations

import logging

class QuietOpticsFilter(logging.Filter):
    """Drops the per-element DEBUG records of ``qimsim.optics``."""

    def filter(self, record: logging.LogRecord) -> bool:
        return not (
            record.levelno <= logging.DEBUG and record.name.startswith("qimsim.optics")
        )


QUIET_OPTICS_FILTER = QuietOpticsFilter()
