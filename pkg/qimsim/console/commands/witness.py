import logging
import sys
from pathlib import Path

import click
import numpy as np

from qimsim.config import load_settings
from qimsim.console import console
from qimsim.console import err_console
from qimsim.console import status
from qimsim.console.errors import error_panel
from qimsim.console.errors import exit_code_for
from qimsim.exceptions import QimsimError
from qimsim.io import CsvTable
from qimsim.io import lookup_serializer
from qimsim.qudit import DensityMatrix
from qimsim.qudit import expectation
from qimsim.qudit import ppt_threshold
from qimsim.qudit import witness_suite
from qimsim.qudit import witness_sweep
from qimsim.run.artifact_persister import config_comments

logger = logging.getLogger(__name__)

DEFAULT_SWEEP_SIZE = 1000


@click.group()
def witness() -> None:
    """Two-qubit entanglement witness demonstrations."""


@witness.command()
def expect() -> None:
    """Prints tr(W rho) for the maximally entangled state and for I/4."""
    suite = witness_suite()
    entangled = expectation(suite.phi_plus, suite.witness)
    noise = expectation(DensityMatrix.maximally_mixed((2, 2)), suite.witness)
    console.print(f"tr(W phi_plus) = {entangled:.12f}")
    console.print(f"tr(W I/4) = {noise:.12f}")


@witness.command()
def threshold() -> None:
    """Prints the largest noise-mixing weight s for which phi_plus stays PPT."""
    s0 = ppt_threshold(witness_suite().phi_plus.density())
    console.print(f"s0 = {s0:.9f}")


@witness.command()
@click.option(
    "--n", "n_samples", type=int, default=DEFAULT_SWEEP_SIZE, show_default=True
)
@click.option("--seed", type=int, help="Defaults to [tool.qimsim] seed.")
@click.option(
    "--out",
    "-o",
    type=click.Path(path_type=Path, dir_okay=False),
    help="CSV file for the per-sample values.",
)
@status("Sampling separable states...")
def sweep(n_samples: int, seed: int | None, out: Path | None) -> None:
    """Evaluates tr(W tau) over random separable states and reports min and max."""
    if out is not None and out.suffix.lower() != ".csv":
        raise click.BadParameter(f"'{out}' must be a .csv file", param_hint="--out")
    try:
        if seed is None:
            seed = load_settings().seed
        values = witness_sweep(n_samples, seed)
        if out is not None:
            comments = config_comments(
                {"command": "witness sweep", "n": n_samples, "seed": seed},
                kind="witness",
            )
            rows = np.column_stack([np.arange(n_samples), values])
            table = CsvTable(("index", "trace_w_tau"), rows, comments)
            lookup_serializer(out).dump(table, out)  # type: ignore[union-attr]
            logger.info(f"Wrote {n_samples} samples to {out}")
    except QimsimError as e:
        err_console.print(error_panel(e))
        sys.exit(exit_code_for(e))

    console.print(f"samples = {n_samples}")
    console.print(f"min = {values.min():.12e}")
    console.print(f"max = {values.max():.12e}")
