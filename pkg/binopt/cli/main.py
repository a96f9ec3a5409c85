import click

from binopt import __version__
from binopt.cli.amplify import amplify
from binopt.cli.fourier import fourier
from binopt.cli.oracle import oracle
from binopt.config.logging import configure_logging
from binopt.config.settings import config

configure_logging(log_level=config.LOGGING_LEVEL)


@click.group()
@click.version_option(__version__, prog_name="binopt")
@click.option(
    "--log-level",
    type=click.Choice(
        ["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"], case_sensitive=False
    ),
    default=None,
    help="Override LOGGING_LEVEL for this invocation.",
)
@click.option(
    "--log-file",
    type=click.Path(dir_okay=False),
    default=None,
    help="Also write detailed logs to this file.",
)
def cli(log_level: str | None, log_file: str | None) -> None:
    """Fourier analysis, oracle synthesis and amplitude amplification for binary optimization."""
    if log_level or log_file:
        configure_logging(log_level=log_level or config.LOGGING_LEVEL, log_file=log_file)


cli.add_command(fourier)
cli.add_command(amplify)
cli.add_command(oracle)
