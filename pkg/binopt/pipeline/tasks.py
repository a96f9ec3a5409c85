from pydantic import BaseModel, ConfigDict

from binopt.amplification.algorithm import AAConfig, find_extrema
from binopt.amplification.report import AARunReport
from binopt.amplification.scaling import direction_for, scale_objective
from binopt.common.enum import Extremum, OracleKind
from binopt.common.exceptions import SimulationLimitExceeded
from binopt.common.types import Bounds
from binopt.config.logging import get_logger
from binopt.config.settings import config
from binopt.fourier.functions import FunctionTable, poly_table, qubo_table
from binopt.fourier.spectrum import FourierSpectrum
from binopt.fourier.transforms import (
    fourier_fast,
    poly_bounds,
    poly_to_fourier,
    qubo_bounds,
    qubo_to_fourier,
    table_bounds,
)
from binopt.oracle.builders import OracleBuild, build_U_f
from binopt.oracle.export import parse_gate_list
from binopt.oracle.reference import verify_oracle
from binopt.simulation.gates import RegisterLayout
from binopt.storage.problem_file import (
    PolyProblem,
    ProblemFile,
    QuboProblem,
    TableProblem,
)

logger = get_logger(__name__)


class Objective(BaseModel):
    """
    A problem turned into F: its table, spectrum and the bounds used to scale it.

    `default_scale` is the scale a run uses unless one is given explicitly.
    """

    model_config = ConfigDict(frozen=True)

    table: FunctionTable
    spectrum: FourierSpectrum
    bounds: Bounds
    default_scale: float


def check_simulation_limit(n: int) -> None:
    """
    Raises:
        SimulationLimitExceeded: If n work qubits exceed the configured limit.
    """
    limit = config.simulation.max_work_qubits
    if n > limit:
        raise SimulationLimitExceeded(
            f"n={n} exceeds the simulation limit of {limit} work qubits"
        )


def problem_spectrum(
    problem: ProblemFile, symmetrize: bool | None = None
) -> FourierSpectrum:
    """
    Fourier spectrum of a problem, from the closed forms where they exist.
    """
    match problem:
        case QuboProblem():
            return qubo_to_fourier(problem.to_qubo(symmetrize))
        case PolyProblem():
            return poly_to_fourier(problem.to_polynomial())
        case TableProblem():
            return fourier_fast(problem.to_table())
    raise TypeError(f"unsupported problem type {type(problem).__name__}")


def resolve_problem(problem: ProblemFile, symmetrize: bool | None = None) -> Objective:
    """
    Evaluate a problem on the whole cube and pick its bounds.

    QUBO and polynomial bounds come from the coefficient signs and default to
    `problem_scale`; tables use their exact range and `default_scale`.
    """
    match problem:
        case QuboProblem():
            q = problem.to_qubo(symmetrize)
            qb = qubo_bounds(q)
            return Objective(
                table=qubo_table(q),
                spectrum=qubo_to_fourier(q),
                bounds=(qb.q_minus, qb.q_plus),
                default_scale=config.problem_scale,
            )
        case PolyProblem():
            p = problem.to_polynomial()
            return Objective(
                table=poly_table(p),
                spectrum=poly_to_fourier(p),
                bounds=poly_bounds(p),
                default_scale=config.problem_scale,
            )
        case TableProblem():
            table = problem.to_table()
            return Objective(
                table=table,
                spectrum=fourier_fast(table),
                bounds=table_bounds(table),
                default_scale=config.default_scale,
            )
    raise TypeError(f"unsupported problem type {type(problem).__name__}")


def amplify_objective(
    objective: Objective,
    which: Extremum,
    cfg: AAConfig,
    oracle: OracleKind = OracleKind.CIRCUIT,
) -> AARunReport:
    check_simulation_limit(objective.table.n)
    logger.info(
        f"Searching the {which.value} of F over n={objective.table.n} "
        f"with bounds {objective.bounds} and scale {cfg.scale:.6f}"
    )
    return find_extrema(
        objective.table,
        objective.bounds,
        which,
        cfg,
        oracle,
        spectrum=objective.spectrum,
    )


def synthesize_oracle(
    objective: Objective, which: Extremum | None = None, scale: float | None = None
) -> tuple[OracleBuild, FunctionTable]:
    """
    Build U_f for F itself, or for its scaled form when `which` is given.

    Returns:
        The oracle build and the table it is meant to realize
    """
    if which is None:
        spectrum, table = objective.spectrum, objective.table
    else:
        scaled = scale_objective(
            objective.table,
            objective.bounds,
            direction_for(which),
            objective.default_scale if scale is None else scale,
            spectrum=objective.spectrum,
        )
        spectrum, table = scaled.spectrum, scaled.table
    build = build_U_f(spectrum, RegisterLayout(n=spectrum.n))
    logger.info(
        f"Synthesized U_f with {spectrum.support_size} blocks and {build.gate_count} gates"
    )
    return build, table


def verify_gate_list(text: str, table: FunctionTable, seed: int | None = 0) -> float:
    """
    Read a written gate list back and compare it with the diagonal oracle.

    Raises:
        OracleVerificationError: If the deviation exceeds verify_tolerance.
    """
    check_simulation_limit(table.n)
    circuit = parse_gate_list(text)
    deviation = verify_oracle(circuit, table, seed=seed)
    logger.info(f"Oracle verification passed: max deviation {deviation:.3e}")
    return deviation
