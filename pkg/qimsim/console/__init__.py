import functools
import logging
from collections.abc import Callable
from typing import TypeVar

from rich.console import Console as RichConsole
from rich.logging import RichHandler
from rich.traceback import install

from qimsim.console.logging.filters import QUIET_OPTICS_FILTER
from qimsim.console.reporter import ConsoleReporter

console = RichConsole()
err_console = RichConsole(stderr=True)
install(console=err_console, show_locals=True, width=200)

_handler = RichHandler(console=err_console, rich_tracebacks=True)
logging.basicConfig(
    level="WARNING",
    format="%(message)s",
    datefmt="[%X]",
    handlers=[_handler],
)
logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., object])


def set_verbosity(verbose: int) -> None:
    """0 warnings only, 1 debug without per-element optics records, 2 everything."""
    logging.getLogger().setLevel(logging.DEBUG if verbose else logging.WARNING)
    if verbose >= 2:
        _handler.removeFilter(QUIET_OPTICS_FILTER)
    else:
        _handler.addFilter(QUIET_OPTICS_FILTER)


def status(message: str, spinner: str = "dots") -> Callable[[F], F]:
    """Decorator to show a status spinner while executing a function."""

    def decorator(func: F) -> F:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):  # noqa: ANN002, ANN003, ANN202
            with err_console.status(message, spinner=spinner):
                return func(*args, **kwargs)

        return wrapper  # type: ignore[return-value]

    return decorator


__all__ = [
    "ConsoleReporter",
    "console",
    "err_console",
    "set_verbosity",
    "status",
]
