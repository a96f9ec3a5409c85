from binopt.amplification.algorithm import (
    AAConfig,
    compute_theta,
    evolve,
    find_extrema,
    lambda_K,
    lambda_opt,
    negative_lambda_iterations,
    optimal_iterations,
    predicted_probabilities,
    prepare_initial,
    reflect_about_initial,
    run,
)
from binopt.amplification.report import AARunReport, RankedCandidate, rank_candidates
from binopt.amplification.scaling import (
    ScaledObjective,
    direction_for,
    scale_objective,
)

__all__ = [
    "AAConfig",
    "AARunReport",
    "RankedCandidate",
    "ScaledObjective",
    "compute_theta",
    "direction_for",
    "evolve",
    "find_extrema",
    "lambda_K",
    "lambda_opt",
    "negative_lambda_iterations",
    "optimal_iterations",
    "predicted_probabilities",
    "prepare_initial",
    "rank_candidates",
    "reflect_about_initial",
    "run",
    "scale_objective",
]
