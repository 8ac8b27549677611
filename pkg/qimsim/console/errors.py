from __future__ import annotations

import logging

from rich.markup import escape
from rich.panel import Panel

from qimsim.exceptions import BenchRunError
from qimsim.exceptions import NumericGuardError
from qimsim.exceptions import QimsimError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_NUMERIC_GUARD = 2


def root_cause(error: BaseException) -> BaseException:
    """The error a run failed with, unwrapped from ``BenchRunError``."""
    if isinstance(error, BenchRunError) and error.__cause__ is not None:
        return error.__cause__
    return error


def exit_code_for(error: BaseException) -> int:
    """1 for bench and input errors, 2 for numeric guards and anything unexpected."""
    cause = root_cause(error)
    if isinstance(cause, NumericGuardError):
        return EXIT_NUMERIC_GUARD
    if isinstance(cause, QimsimError):
        return EXIT_INPUT_ERROR
    return EXIT_NUMERIC_GUARD


def error_panel(error: BaseException) -> Panel:
    cause = root_cause(error)
    title = (
        "Numeric Guard Error"
        if isinstance(cause, NumericGuardError)
        else "Error"
        if isinstance(cause, QimsimError)
        else "Unexpected Error"
    )
    return Panel(
        f"[bold red]{title}:[/] [{type(cause).__name__}] {escape(str(cause))}",
        border_style="red",
        expand=False,
    )
