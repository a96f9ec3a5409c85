import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from binopt.common.enum import Direction, OracleKind, RunMode
from binopt.common.utils import format_bits


class RankedCandidate(BaseModel):
    """One point of the cube with its objective value and final probability."""

    model_config = ConfigDict(frozen=True)

    x: int = Field(ge=0)
    bits: str = Field(description="x printed most significant bit first")
    value: float = Field(description="F(x) of the unscaled objective")
    probability: float = Field(ge=0)


class AARunReport(BaseModel):
    """
    Result of one amplitude amplification run.

    Per-x lists are indexed by x. `ranked` is sorted by final probability,
    descending, ties broken by ascending x.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    theta: float
    iterations: int = Field(ge=0, description="K actually applied")
    optimal_iterations: int = Field(ge=0, description="floor(pi / (2 theta)), uncapped")
    lambda_k: float
    lambda_opt: float
    direction: Direction
    scale: float
    oracle: OracleKind
    mode: RunMode
    p0: list[float]
    p_k: list[float]
    predicted_p_k: list[float]
    values: list[float] = Field(description="F(x) of the unscaled objective")
    ancilla_outcome: int | None = None
    ranked: list[RankedCandidate]
    ancilla_balance: list[float] = Field(
        default_factory=list, description="P(ancilla = 0) after each iteration"
    )
    branch_divergence: list[float] = Field(
        default_factory=list,
        description="Distance between the two conditional work distributions after each iteration",
    )
    shots: int | None = None
    seed: int | None = None
    rng: str | None = None

    @model_validator(mode="after")
    def _check_distributions(self) -> "AARunReport":
        size = 1 << self.n
        for name in ("p0", "p_k", "predicted_p_k", "values"):
            if len(getattr(self, name)) != size:
                raise ValueError(f"{name} must have {size} entries")
        for name in ("p0", "p_k"):
            total = sum(getattr(self, name))
            if abs(total - 1.0) > 1e-9:
                raise ValueError(f"{name} sums to {total}, not 1")
        return self

    @property
    def top(self) -> RankedCandidate:
        return self.ranked[0]


def rank_candidates(
    n: int, values: np.ndarray, p_k: np.ndarray
) -> list[RankedCandidate]:
    xs = np.arange(1 << n)
    # lexsort keys run from least to most significant
    order = np.lexsort((xs, -p_k))
    return [
        RankedCandidate(
            x=int(x),
            bits=format_bits(int(x), n),
            value=float(values[x]),
            probability=float(p_k[x]),
        )
        for x in order
    ]
