import click

from qimsim.__version__ import __version__
from qimsim.console.commands import presets
from qimsim.console.commands import run
from qimsim.console.commands import witness


@click.group()
@click.version_option(__version__, prog_name="qimsim")
def cli() -> None:
    """qimsim CLI - simulate coincidence-imaging benches and witness demos."""
    pass


cli.add_command(presets)
cli.add_command(run)
cli.add_command(witness)


def main() -> None:
    """Main entry point for the CLI."""
    cli()


if __name__ == "__main__":
    main()
