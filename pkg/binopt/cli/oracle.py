from pathlib import Path

import click

from binopt.cli.options import (
    ScaleType,
    emit,
    handles_errors,
    problem_argument,
    symmetrize_option,
)
from binopt.common.enum import Extremum
from binopt.oracle.export import format_gate_list
from binopt.pipeline.tasks import resolve_problem, synthesize_oracle, verify_gate_list
from binopt.storage.problem_file import load_problem


@click.command()
@problem_argument
@click.option(
    "--mode",
    type=click.Choice([e.value for e in Extremum]),
    default=None,
    help="Synthesize the oracle of the scaled objective used to find the minimum or maximum.",
)
@click.option("--scale", type=ScaleType(), default=None, help="Scale used with --mode.")
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the gate list to this file instead of stdout.",
)
@click.option(
    "--verify",
    is_flag=True,
    default=False,
    help="Simulate the written gate list against the diagonal oracle.",
)
@click.option("--seed", type=int, default=0, show_default=True, help="Seed of the random test state used by --verify.")
@symmetrize_option
@handles_errors
def oracle(
    problem_path: Path,
    mode: str | None,
    scale: float | None,
    out: Path | None,
    verify: bool,
    seed: int,
    symmetrize: bool,
) -> None:
    """Write the gate list of U_f for a problem."""
    problem = load_problem(problem_path)
    objective = resolve_problem(problem, symmetrize or None)
    which = Extremum(mode) if mode is not None else None
    build, table = synthesize_oracle(objective, which, scale)

    text = format_gate_list(build.circuit)
    emit(text, out)

    if verify:
        deviation = verify_gate_list(text, table, seed)
        click.echo(f"max amplitude deviation: {deviation:.3e}", err=out is None)
