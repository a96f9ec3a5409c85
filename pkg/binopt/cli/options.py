import functools
import math
import traceback
from collections.abc import Callable
from pathlib import Path
from typing import Any, Literal

import click

from binopt.common.enum import ExitCode
from binopt.common.exceptions import (
    BinoptError,
    DegenerateObjectiveError,
    InvalidProblemError,
    IterationCapExceeded,
    NormDriftError,
    OracleVerificationError,
    ProblemFileError,
    ScalingError,
    SimulationLimitExceeded,
    ThetaDomainError,
    WidthMismatchError,
)
from binopt.config.logging import get_logger
from binopt.storage.reports import write_text

logger = get_logger(__name__)

EXIT_CODES: list[tuple[type[BinoptError], ExitCode]] = [
    (ProblemFileError, ExitCode.PARSE_ERROR),
    (InvalidProblemError, ExitCode.INVALID_PROBLEM),
    (WidthMismatchError, ExitCode.INVALID_PROBLEM),
    (ScalingError, ExitCode.INVALID_PROBLEM),
    (DegenerateObjectiveError, ExitCode.DEGENERATE_OBJECTIVE),
    (ThetaDomainError, ExitCode.DEGENERATE_OBJECTIVE),
    (OracleVerificationError, ExitCode.VERIFICATION_FAILED),
    (NormDriftError, ExitCode.VERIFICATION_FAILED),
    (SimulationLimitExceeded, ExitCode.LIMIT_EXCEEDED),
    (IterationCapExceeded, ExitCode.LIMIT_EXCEEDED),
]


def exit_code_for(error: BaseException) -> ExitCode:
    for error_type, code in EXIT_CODES:
        if isinstance(error, error_type):
            return code
    return ExitCode.UNEXPECTED


def handles_errors(command: Callable[..., Any]) -> Callable[..., Any]:
    """Turn library errors into a logged message and a distinct exit status."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except click.ClickException:
            raise
        except BinoptError as e:
            code = exit_code_for(e)
            logger.error(f"{type(e).__name__}: {e}")
            raise SystemExit(code.value) from e
        except Exception as e:
            logger.error(f"An unexpected error occurred: {e}")
            logger.error(traceback.format_exc())
            raise SystemExit(ExitCode.UNEXPECTED.value) from e

    return wrapper


class IterationsType(click.ParamType):
    """`auto` or a non-negative integer K."""

    name = "auto|K"

    def convert(self, value, param, ctx) -> int | Literal["auto"]:
        if isinstance(value, int):
            return value
        if str(value).lower() == "auto":
            return "auto"
        try:
            iterations = int(value)
        except ValueError:
            self.fail(f"{value!r} is neither 'auto' nor an integer", param, ctx)
        if iterations < 0:
            self.fail(f"iterations must be non-negative, got {iterations}", param, ctx)
        return iterations


class ScaleType(click.ParamType):
    """`pi/2`, `pi/4` or an angle in radians."""

    name = "pi/2|pi/4|radians"

    NAMED = {"pi/2": math.pi / 2, "pi/4": math.pi / 4}

    def convert(self, value, param, ctx) -> float:
        if isinstance(value, float):
            return value
        key = str(value).lower().replace(" ", "")
        if key in self.NAMED:
            return self.NAMED[key]
        try:
            scale = float(key)
        except ValueError:
            self.fail(f"{value!r} is not pi/2, pi/4 or a number", param, ctx)
        if not 0.0 < scale <= math.pi / 2:
            self.fail(f"scale must lie in (0, pi/2], got {scale}", param, ctx)
        return scale


problem_argument = click.argument(
    "problem_path", type=click.Path(dir_okay=False, path_type=Path)
)
symmetrize_option = click.option(
    "--symmetrize",
    is_flag=True,
    default=False,
    help="Replace an asymmetric QUBO matrix by (Q + Q^T)/2 instead of rejecting it.",
)


def emit(content: str, out: Path | None) -> None:
    """Write content to `out`, or to stdout when no path is given."""
    if out is None:
        click.echo(content, nl=False)
    else:
        write_text(out, content)
