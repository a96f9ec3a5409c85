import math
from collections.abc import Mapping

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from binopt.config.settings import config
from binopt.fourier.bits import SubsetMask


class FourierSpectrum(BaseModel):
    """
    Sparse parity-basis coefficients f-hat(S) of a function on {0,1}^n.

    Keys are subset masks (bit j set iff j in S); absent keys mean 0. Entries
    are kept in ascending mask order.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Number of input bits")
    coeffs: dict[int, float] = Field(default_factory=dict)

    @field_validator("coeffs", mode="after")
    @classmethod
    def _check_coeffs(cls, coeffs: dict[int, float], info: ValidationInfo):
        n = info.data.get("n")
        for mask, value in coeffs.items():
            if mask < 0 or (n is not None and mask >= 1 << n):
                raise ValueError(f"subset mask {mask} outside P[{n}]")
            if not math.isfinite(value):
                raise ValueError(f"coefficient at mask {mask} is not finite")
        return dict(sorted(coeffs.items()))

    @classmethod
    def from_mapping(
        cls, n: int, coeffs: Mapping[int, float], threshold: float | None = None
    ) -> "FourierSpectrum":
        """
        Build a spectrum, dropping coefficients whose magnitude is below threshold.
        """
        threshold = config.drop_threshold if threshold is None else threshold
        return cls(
            n=n,
            coeffs={
                int(mask): float(value)
                for mask, value in coeffs.items()
                if abs(value) >= threshold and value != 0.0
            },
        )

    @classmethod
    def from_dense(
        cls, n: int, dense: np.ndarray, threshold: float | None = None
    ) -> "FourierSpectrum":
        threshold = config.drop_threshold if threshold is None else threshold
        (support,) = np.nonzero((np.abs(dense) >= threshold) & (dense != 0.0))
        return cls(n=n, coeffs={int(mask): float(dense[mask]) for mask in support})

    def to_dense(self) -> np.ndarray:
        dense = np.zeros(1 << self.n, dtype=np.float64)
        for mask, value in self.coeffs.items():
            dense[mask] = value
        return dense

    def coefficient(self, subset: SubsetMask | int) -> float:
        mask = subset.mask if isinstance(subset, SubsetMask) else subset
        return self.coeffs.get(mask, 0.0)

    def entries(self) -> list[tuple[SubsetMask, float]]:
        return [
            (SubsetMask(n=self.n, mask=mask), value)
            for mask, value in self.coeffs.items()
        ]

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(self.coeffs)

    @property
    def support_size(self) -> int:
        return len(self.coeffs)

    @property
    def degree(self) -> int:
        """Largest |S| carrying a nonzero coefficient."""
        return max((mask.bit_count() for mask in self.coeffs), default=0)

    def affine(self, factor: float, shift: float = 0.0) -> "FourierSpectrum":
        """
        Spectrum of factor * f + shift; only the constant coefficient moves.
        """
        scaled = {mask: factor * value for mask, value in self.coeffs.items()}
        scaled[0] = scaled.get(0, 0.0) + shift
        return FourierSpectrum.from_mapping(self.n, scaled)

    def negated(self) -> "FourierSpectrum":
        return FourierSpectrum(
            n=self.n, coeffs={mask: -value for mask, value in self.coeffs.items()}
        )
