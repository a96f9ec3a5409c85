"""
Non-Boolean amplitude amplification.

Starting from Psi_0 = H^(n+1)|0>, iteration j applies U_f^dagger (j even) or
U_f (j odd), followed by the reflection S_Psi0 = 2|Psi_0><Psi_0| - 1. After K
iterations

    p_K(x) = p_0(x) (1 + lambda_K(theta) (cos(theta) - cos(f(x))))

with cos(theta) = sum_x p_0(x) cos(f(x)) and
lambda_K(theta) = (cos(theta) - cos((2K + 1) theta)) / sin(theta)^2.
"""

import math
from collections.abc import Callable
from typing import Annotated, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from binopt.amplification.report import AARunReport, rank_candidates
from binopt.amplification.scaling import (
    ScaledObjective,
    direction_for,
    scale_objective,
)
from binopt.common.enum import Extremum, OracleKind, RunMode
from binopt.common.exceptions import (
    DegenerateThetaError,
    IterationCapExceeded,
    NormDriftError,
    ThetaDomainError,
    WidthMismatchError,
)
from binopt.common.types import Bounds, RealVector
from binopt.config.logging import get_logger
from binopt.config.settings import config
from binopt.fourier.functions import FunctionTable
from binopt.fourier.spectrum import FourierSpectrum
from binopt.oracle.builders import build_U_f, build_U_f_dagger
from binopt.oracle.reference import reference_oracle_apply
from binopt.simulation.gates import ANCILLA, RegisterLayout, hadamard_all
from binopt.simulation.statevector import (
    StateVector,
    make_rng,
    measure_qubit,
    prepare_zero,
    sample_work_register,
    work_probabilities,
)

logger = get_logger(__name__)

OracleStep = Callable[[StateVector], StateVector]


class AAConfig(BaseModel):
    """
    Run parameters for amplitude amplification.

    Attributes:
        iterations: "auto" for floor(pi / (2 theta)), or an explicit K
        iteration_cap: Largest K a run may use
        mode: EXACT reports Born marginals, SAMPLED measures the registers
        shots: Work-register measurements in sampled mode
        seed: Seed of the measurement generator in sampled mode
        scale: Width of the interval the objective is scaled into
    """

    model_config = ConfigDict(frozen=True)

    iterations: Annotated[int, Field(ge=0)] | Literal["auto"] = "auto"
    iteration_cap: int = Field(default_factory=lambda: config.iteration_cap, ge=1)
    mode: RunMode = RunMode.EXACT
    shots: int | None = Field(default=None, ge=1)
    seed: int | None = None
    scale: float = Field(
        default_factory=lambda: config.default_scale, gt=0, le=math.pi / 2
    )

    @model_validator(mode="after")
    def _check_sampling(self) -> "AAConfig":
        if self.mode == RunMode.SAMPLED and (self.shots is None or self.seed is None):
            raise ValueError("sampled mode needs both shots and seed")
        return self


def prepare_initial(layout: RegisterLayout) -> StateVector:
    """
    Psi_0 = H^(n+1)|0>^(n+1): every amplitude equals 2^(-(n+1)/2).
    """
    return prepare_zero(layout).apply_circuit(hadamard_all(layout))


def compute_theta(objective: ScaledObjective, p0: RealVector) -> float:
    """
    theta = arccos(sum_x p0(x) cos f(x)), evaluated on the scaled table.

    Raises:
        ThetaDomainError: If p0 is not a distribution or the cosine sum leaves
            [-1, 1] by more than 1e-12.
    """
    p0 = np.asarray(p0, dtype=np.float64)
    if p0.shape != (1 << objective.n,):
        raise WidthMismatchError(
            f"p0 has shape {p0.shape}, expected {1 << objective.n} entries"
        )
    if abs(p0.sum() - 1.0) > 1e-9:
        raise ThetaDomainError(f"p0 sums to {p0.sum()}, not 1")

    cos_theta = float(np.dot(p0, np.cos(objective.table.values)))
    if abs(cos_theta) > 1.0 + 1e-12:
        raise ThetaDomainError(f"cos(theta) = {cos_theta} is outside [-1, 1]")
    return math.acos(min(1.0, max(-1.0, cos_theta)))


def _check_theta(theta: float) -> None:
    if not 0.0 < theta < math.pi:
        raise DegenerateThetaError(
            f"theta = {theta} gives sin(theta) = 0; the objective has no contrast to amplify"
        )


def lambda_K(theta: float, K: int) -> float:
    """
    lambda_K(theta) = (cos(theta) - cos((2K + 1) theta)) / sin(theta)^2.
    """
    _check_theta(theta)
    if K < 0:
        raise ValueError(f"K must be non-negative, got {K}")
    return (math.cos(theta) - math.cos((2 * K + 1) * theta)) / math.sin(theta) ** 2


def lambda_opt(theta: float) -> float:
    """
    Upper bound 1 / (1 - cos(theta)) of lambda_K over all K.
    """
    _check_theta(theta)
    return 1.0 / (1.0 - math.cos(theta))


def optimal_iterations(theta: float, cap: int | None = None) -> int:
    """
    K-tilde = floor(pi / (2 theta)), the last K of the monotone regime.

    Values above cap are clipped to cap with a warning.
    """
    _check_theta(theta)
    cap = config.iteration_cap if cap is None else cap
    k_tilde = math.floor(math.pi / (2 * theta))
    if k_tilde > cap:
        logger.warning(
            f"Optimal iteration count {k_tilde} exceeds the cap {cap}; using {cap}"
        )
        return cap
    return k_tilde


def negative_lambda_iterations(theta: float, cap: int | None = None) -> int | None:
    """
    Smallest K >= 1 with lambda_K(theta) < 0, or None if there is none up to cap.

    With a negative lambda the points with cos f(x) > cos(theta) gain
    probability instead of losing it.
    """
    _check_theta(theta)
    cap = config.iteration_cap if cap is None else cap
    ks = np.arange(1, cap + 1)
    negative = np.flatnonzero(np.cos((2 * ks + 1) * theta) > math.cos(theta))
    if negative.size == 0:
        return None
    return int(ks[negative[0]])


def reflect_about_initial(state: StateVector) -> StateVector:
    """
    psi <- 2 <Psi_0|psi> Psi_0 - psi, in place.
    """
    amplitude = 1.0 / math.sqrt(state.layout.dimension)
    overlap = amplitude * state.amps.sum()
    state.amps *= -1
    state.amps += 2 * overlap * amplitude
    return state


def _oracle_steps(
    objective: ScaledObjective, layout: RegisterLayout, oracle: OracleKind
) -> tuple[OracleStep, OracleStep]:
    """(U_f, U_f^dagger) as state updates."""
    if oracle == OracleKind.DIAGONAL:
        return (
            lambda state: reference_oracle_apply(objective.table, state, sign=1),
            lambda state: reference_oracle_apply(objective.table, state, sign=-1),
        )
    forward = build_U_f(objective.spectrum, layout).circuit
    backward = build_U_f_dagger(objective.spectrum, layout).circuit
    return (
        lambda state: state.apply_circuit(forward),
        lambda state: state.apply_circuit(backward),
    )


def evolve(
    objective: ScaledObjective,
    iterations: int,
    oracle: OracleKind = OracleKind.CIRCUIT,
    trace: list[tuple[float, float]] | None = None,
) -> StateVector:
    """
    Run `iterations` amplification steps from Psi_0 and return the final state.

    Args:
        objective: Scaled objective whose oracle drives the iterations
        iterations: Number of steps K
        oracle: Synthesized circuit or diagonal reference
        trace: If given, receives (P(ancilla = 0), branch divergence) per step
    """
    layout = RegisterLayout(n=objective.n)
    state = prepare_initial(layout)
    if iterations == 0:
        return state

    forward, backward = _oracle_steps(objective, layout, oracle)
    for j in range(iterations):
        if j % 2 == 0:
            backward(state)
        else:
            forward(state)
        reflect_about_initial(state)

        if trace is not None:
            trace.append((state.ancilla_probability(0), state.branch_divergence()))
        logger.debug(
            f"Iteration {j + 1}/{iterations}: P(a=0)={state.ancilla_probability(0):.12f}"
        )

    drift = abs(state.norm() - 1.0)
    if drift > config.simulation.norm_drift_tolerance:
        raise NormDriftError(f"norm drifted by {drift:.3e} over {iterations} iterations")
    return state


def predicted_probabilities(
    objective: ScaledObjective, theta: float, K: int, p0: RealVector
) -> RealVector:
    """
    Closed-form p_K(x) = p0(x) (1 + lambda_K(theta) (cos(theta) - cos f(x))).
    """
    p0 = np.asarray(p0, dtype=np.float64)
    predicted = p0 * (
        1.0 + lambda_K(theta, K) * (math.cos(theta) - np.cos(objective.table.values))
    )
    total = predicted.sum()
    if abs(total - 1.0) > 1e-9:
        logger.warning(f"Predicted probabilities sum to {total:.12f}")
    return predicted


def run(
    objective: ScaledObjective,
    cfg: AAConfig | None = None,
    oracle: OracleKind = OracleKind.CIRCUIT,
) -> AARunReport:
    """
    Amplify the probabilities of the points where the scaled objective is
    largest and report the outcome.

    Args:
        objective: Scaled objective f_plus or f_minus
        cfg: Iteration count, cap and measurement mode
        oracle: Synthesized circuit or diagonal reference for U_f

    Returns:
        AARunReport: theta, lambda, initial and final probabilities, ranked points

    Raises:
        DegenerateThetaError: If theta is within theta_floor of 0 or pi.
        IterationCapExceeded: If an explicit iteration count exceeds the cap.
    """
    cfg = cfg or AAConfig()
    layout = RegisterLayout(n=objective.n)
    p0 = work_probabilities(prepare_initial(layout))

    theta = compute_theta(objective, p0)
    if theta < config.theta_floor or math.pi - theta < config.theta_floor:
        raise DegenerateThetaError(
            f"theta = {theta:.3e} is within {config.theta_floor:.0e} of 0 or pi; "
            "the objective is too close to constant to amplify"
        )
    k_tilde = math.floor(math.pi / (2 * theta))

    if cfg.iterations == "auto":
        iterations = optimal_iterations(theta, cfg.iteration_cap)
    else:
        iterations = cfg.iterations
        if iterations > cfg.iteration_cap:
            raise IterationCapExceeded(
                f"{iterations} iterations requested, the cap is {cfg.iteration_cap}"
            )

    trace: list[tuple[float, float]] = []
    state = evolve(objective, iterations, oracle, trace)

    ancilla_outcome = None
    if cfg.mode == RunMode.SAMPLED:
        rng = make_rng(cfg.seed)
        ancilla_outcome, collapsed = measure_qubit(state, ANCILLA, rng)
        p_k = sample_work_register(collapsed, cfg.shots, rng)
    else:
        p_k = work_probabilities(state)

    report = AARunReport(
        n=objective.n,
        theta=theta,
        iterations=iterations,
        optimal_iterations=k_tilde,
        lambda_k=lambda_K(theta, iterations),
        lambda_opt=lambda_opt(theta),
        direction=objective.direction,
        scale=objective.scale,
        oracle=oracle,
        mode=cfg.mode,
        p0=p0.tolist(),
        p_k=p_k.tolist(),
        predicted_p_k=predicted_probabilities(objective, theta, iterations, p0).tolist(),
        values=objective.base.values.tolist(),
        ancilla_outcome=ancilla_outcome,
        ranked=rank_candidates(objective.n, objective.base.values, p_k),
        ancilla_balance=[balance for balance, _ in trace],
        branch_divergence=[divergence for _, divergence in trace],
        shots=cfg.shots,
        seed=cfg.seed,
        rng=config.simulation.measurement_rng if cfg.mode == RunMode.SAMPLED else None,
    )
    logger.info(
        f"theta={theta:.6f}, K={iterations}, lambda_K={report.lambda_k:.4f}, "
        f"top x={report.top.bits} (F={report.top.value:g}, p={report.top.probability:.4f})"
    )
    return report


def find_extrema(
    objective: FunctionTable | FourierSpectrum,
    bounds: Bounds | None,
    which: Extremum,
    cfg: AAConfig | None = None,
    oracle: OracleKind = OracleKind.CIRCUIT,
    spectrum: FourierSpectrum | None = None,
) -> AARunReport:
    """
    Search for the minima (plus scaling) or maxima (minus scaling) of F.

    A tabled F whose spectrum is already known passes it as `spectrum`.
    The head of the report's ranked list is the candidate extremum.
    """
    cfg = cfg or AAConfig()
    scaled = scale_objective(
        objective, bounds, direction_for(which), cfg.scale, spectrum=spectrum
    )
    return run(scaled, cfg, oracle)
