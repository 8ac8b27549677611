import sys
from pathlib import Path

import click
from rich.table import Table

from qimsim.bench import list_presets
from qimsim.bench import preset_path
from qimsim.console import console
from qimsim.console import err_console
from qimsim.console.errors import error_panel
from qimsim.exceptions import BenchLoaderError
from qimsim.exceptions import SerializerError
from qimsim.io import lookup_serializer


@click.group()
def presets() -> None:
    """Bench files shipped with qimsim."""


@presets.command(name="list")
def list_command() -> None:
    """Lists preset names."""
    table = Table(title="Presets", show_header=True, header_style="bold magenta")
    table.add_column("Name", style="dim cyan")
    table.add_column("File")
    for name in list_presets():
        table.add_row(name, preset_path(name).name)
    console.print(table)


@presets.command()
@click.argument("name")
@click.option(
    "--out",
    "-o",
    type=click.Path(path_type=Path, dir_okay=False),
    help="Copy the preset to a .bench or .txt file instead of printing it.",
)
def show(name: str, out: Path | None) -> None:
    """Prints the bench text of preset NAME."""
    serializer = lookup_serializer(out) if out is not None else None
    if out is not None and (serializer is None or serializer.name != "text"):
        raise click.BadParameter("must end in .bench or .txt", param_hint="--out")
    try:
        text = preset_path(name).read_text(encoding="utf-8")
        if serializer is not None:
            serializer.dump(text, out)
    except (BenchLoaderError, SerializerError) as e:
        err_console.print(error_panel(e))
        sys.exit(1)
    if out is None:
        console.print(text, markup=False, highlight=False, end="")
    else:
        console.print(f"Wrote {out}")
