import logging
import sys
from pathlib import Path

import click

from qimsim.console import console
from qimsim.console import err_console
from qimsim.console import set_verbosity
from qimsim.console.errors import error_panel
from qimsim.console.errors import exit_code_for
from qimsim.console.reporter import ConsoleReporter
from qimsim.exceptions import QimsimError
from qimsim.optics import BucketMode
from qimsim.run import BenchRunCoordinator
from qimsim.run import Status
from qimsim.run import run_config_from_options

logger = logging.getLogger(__name__)


@click.command()
@click.argument("bench", type=str)
@click.option(
    "--out",
    "-o",
    type=click.Path(path_type=Path, dir_okay=False),
    help="Pattern CSV to write; sidecars go next to it.",
)
@click.option("--grid-n", type=int, help="Samples on the arm grid (at least 64).")
@click.option("--p-max", type=float, help="Largest input wavenumber in rad/m.")
@click.option("--seed", type=int, help="Seed for random-phase realizations.")
@click.option(
    "--bucket",
    type=click.Choice([mode.value for mode in BucketMode]),
    help="Integration level of a bucket detector in arm A.",
)
@click.option("--realizations", type=int, help="Monte Carlo realizations.")
@click.option(
    "--raw/--no-raw",
    default=None,
    help="Write unnormalized rates instead of peak-normalized patterns.",
)
@click.option(
    "--set",
    "overrides",
    multiple=True,
    metavar="KEY=VALUE",
    help="Override a bench field by dotted path, e.g. arm_b.elements.0.d=0.48.",
)
@click.option(
    "--summary-format",
    type=click.Choice(["json", "yaml"]),
    help="Format of the run summary written next to the pattern.",
)
@click.option(
    "--allow-diverging",
    is_flag=True,
    default=None,
    help="Accept negative focal lengths.",
)
@click.option(
    "--verbose",
    "-v",
    count=True,
    help="Show status and debug output; repeat to include per-element optics.",
)
def run(
    bench: str,
    out: Path | None,
    grid_n: int | None,
    p_max: float | None,
    seed: int | None,
    bucket: str | None,
    realizations: int | None,
    raw: bool | None,
    overrides: tuple[str, ...],
    summary_format: str | None,
    allow_diverging: bool | None,
    verbose: int,
) -> None:
    """
    Simulates a bench and writes its coincidence pattern.

    BENCH: a .bench file or the name of a shipped preset.
    """
    set_verbosity(verbose)
    reporter = ConsoleReporter(rich_console=console, verbose=bool(verbose))

    try:
        config = run_config_from_options(
            bench=bench,
            out=out,
            grid_n=grid_n,
            p_max=p_max,
            seed=seed,
            bucket=bucket,
            realizations=realizations,
            raw=raw,
            allow_diverging=allow_diverging,
            summary_format=summary_format,
            overrides=overrides,
        )
        summary = BenchRunCoordinator(reporter=reporter).execute(config)
    except QimsimError as e:
        err_console.print(error_panel(e))
        sys.exit(exit_code_for(e))
    except Exception as e:
        logger.debug("Unexpected failure", exc_info=True)
        err_console.print(error_panel(e))
        sys.exit(exit_code_for(e))

    if summary.status != Status.SUCCESS:
        sys.exit(1)
