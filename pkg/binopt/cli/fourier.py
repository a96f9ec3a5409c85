from pathlib import Path

import click

from binopt.cli.options import emit, handles_errors, problem_argument, symmetrize_option
from binopt.config.logging import get_logger
from binopt.pipeline.tasks import problem_spectrum
from binopt.storage.problem_file import load_problem
from binopt.storage.reports import SpectrumFile

logger = get_logger(__name__)


@click.command()
@problem_argument
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the spectrum to this file instead of stdout.",
)
@symmetrize_option
@handles_errors
def fourier(problem_path: Path, out: Path | None, symmetrize: bool) -> None:
    """Write the sparse Fourier spectrum of a problem as JSON."""
    problem = load_problem(problem_path)
    spectrum = problem_spectrum(problem, symmetrize or None)
    logger.info(
        f"{problem.label}: {spectrum.support_size} nonzero coefficients, degree {spectrum.degree}"
    )
    spectrum_file = SpectrumFile.from_spectrum(spectrum, name=problem.name)
    emit(spectrum_file.model_dump_json(indent=2) + "\n", out)
