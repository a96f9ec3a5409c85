import time
from datetime import UTC, datetime
from pathlib import Path
from typing import Literal

import click

from binopt import __version__
from binopt.amplification.algorithm import AAConfig
from binopt.cli.options import (
    IterationsType,
    ScaleType,
    emit,
    handles_errors,
    problem_argument,
    symmetrize_option,
)
from binopt.common.enum import Extremum, OracleKind, RunMode
from binopt.config.logging import get_logger
from binopt.config.settings import config
from binopt.pipeline.tasks import amplify_objective, resolve_problem
from binopt.storage.problem_file import load_problem
from binopt.storage.reports import (
    ProblemEcho,
    ReportFile,
    RunTiming,
    format_histogram,
    write_text,
)

logger = get_logger(__name__)


@click.command()
@problem_argument
@click.option(
    "--mode",
    type=click.Choice([e.value for e in Extremum]),
    required=True,
    help="Search for the minimum or the maximum of the objective.",
)
@click.option(
    "--iterations",
    type=IterationsType(),
    default="auto",
    show_default=True,
    help="Number of amplification steps; auto uses floor(pi / (2 theta)).",
)
@click.option(
    "--scale",
    type=ScaleType(),
    default=None,
    help="Width of the interval the objective is scaled into "
    "[default: pi/4 for qubo and poly problems, pi/2 for tables].",
)
@click.option("--shots", type=click.IntRange(min=1), default=None, help="Sample instead of reporting exact probabilities.")
@click.option("--seed", type=int, default=None, help="Seed of the measurement generator (required with --shots).")
@click.option(
    "--oracle",
    "oracle_kind",
    type=click.Choice([e.value for e in OracleKind]),
    default=OracleKind.CIRCUIT.value,
    show_default=True,
    help="Simulate the synthesized gate sequence or the diagonal reference.",
)
@click.option("--cap", type=click.IntRange(min=1), default=None, help="Iteration cap [default: from config].")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Write x_binary, F(x), p0, pK, ratio rows here.")
@click.option("--json", "json_path", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Write the report here instead of stdout.")
@symmetrize_option
@handles_errors
def amplify(
    problem_path: Path,
    mode: str,
    iterations: int | Literal["auto"],
    scale: float | None,
    shots: int | None,
    seed: int | None,
    oracle_kind: str,
    cap: int | None,
    csv_path: Path | None,
    json_path: Path | None,
    symmetrize: bool,
) -> None:
    """Run amplitude amplification towards the minimum or maximum of a problem."""
    if shots is not None and seed is None:
        raise click.UsageError("--shots needs --seed so that sampled runs are reproducible")

    started_at = datetime.now(UTC)
    start = time.perf_counter()

    problem = load_problem(problem_path)
    objective = resolve_problem(problem, symmetrize or None)
    cfg = AAConfig(
        iterations=iterations,
        iteration_cap=cap or config.iteration_cap,
        mode=RunMode.SAMPLED if shots is not None else RunMode.EXACT,
        shots=shots,
        seed=seed,
        scale=objective.default_scale if scale is None else scale,
    )
    report = amplify_objective(objective, Extremum(mode), cfg, OracleKind(oracle_kind))

    report_file = ReportFile(
        tool_version=__version__,
        problem=ProblemEcho(
            kind=problem.problem_kind,
            n=problem.n,
            name=problem.name,
            source=str(problem_path),
        ),
        bounds=objective.bounds,
        config=config.model_dump(mode="json"),
        report=report,
        timing=RunTiming(
            started_at=started_at, wall_clock_seconds=time.perf_counter() - start
        ),
    )
    emit(report_file.to_json() + "\n", json_path)
    if csv_path is not None:
        write_text(csv_path, format_histogram(report))

    logger.info(
        f"{problem.label}: theta={report.theta:.4f}, K={report.iterations}, "
        f"lambda_K={report.lambda_k:.2f}, candidate {report.top.bits} with F={report.top.value:g}"
    )
