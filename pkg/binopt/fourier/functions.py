from collections.abc import Iterable

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationInfo,
    field_validator,
    model_validator,
)

from binopt.common.enum import VariableOrder
from binopt.common.exceptions import AsymmetricMatrixError, InvalidProblemError
from binopt.common.utils import bit_columns, cube_indices
from binopt.fourier.bits import BitString


def _frozen_array(values, dtype=np.float64) -> np.ndarray:
    array = np.array(values, dtype=dtype)
    array.flags.writeable = False
    return array


class FunctionTable(BaseModel):
    """
    A real-valued function on {0,1}^n stored densely; entry x holds f(x).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=1, description="Number of input bits")
    values: np.ndarray = Field(description="The 2^n function values")

    @field_validator("values", mode="before")
    @classmethod
    def _as_array(cls, v) -> np.ndarray:
        return _frozen_array(v)

    @model_validator(mode="after")
    def _check_values(self) -> "FunctionTable":
        if self.values.shape != (1 << self.n,):
            raise InvalidProblemError(
                f"function table for n={self.n} needs {1 << self.n} values, got shape {self.values.shape}"
            )
        if not np.all(np.isfinite(self.values)):
            raise InvalidProblemError("function table contains non-finite values")
        return self

    @classmethod
    def constant(cls, n: int, c: float = 0.0) -> "FunctionTable":
        return cls(n=n, values=np.full(1 << n, c, dtype=np.float64))

    def __call__(self, x: BitString | int) -> float:
        index = x.value if isinstance(x, BitString) else x
        return float(self.values[index])

    def __len__(self) -> int:
        return len(self.values)


class QuboMatrix(BaseModel):
    """
    Symmetric QUBO matrix Q defining B(x) = sum_ij Q_ij x_i x_j.

    Row and column i belong to variable x_i.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=1, description="Number of binary variables")
    matrix: np.ndarray = Field(description="n x n symmetric real matrix")

    @field_validator("matrix", mode="before")
    @classmethod
    def _as_array(cls, v) -> np.ndarray:
        try:
            return _frozen_array(v)
        except ValueError as e:
            raise InvalidProblemError(f"QUBO matrix rows are ragged: {e}") from e

    @model_validator(mode="after")
    def _check_matrix(self) -> "QuboMatrix":
        if self.matrix.shape != (self.n, self.n):
            raise InvalidProblemError(
                f"QUBO matrix for n={self.n} must be {self.n}x{self.n}, got shape {self.matrix.shape}"
            )
        if not np.all(np.isfinite(self.matrix)):
            raise InvalidProblemError("QUBO matrix contains non-finite entries")
        if not np.array_equal(self.matrix, self.matrix.T):
            i, j = np.argwhere(self.matrix != self.matrix.T)[0]
            raise AsymmetricMatrixError(
                f"QUBO matrix is not symmetric: Q[{i}][{j}]={self.matrix[i, j]} but Q[{j}][{i}]={self.matrix[j, i]}"
            )
        return self

    @classmethod
    def from_rows(
        cls,
        rows,
        symmetrize: bool = False,
        variable_order: VariableOrder = VariableOrder.LSB_FIRST,
    ) -> "QuboMatrix":
        """
        Build a QUBO matrix from nested rows.

        Args:
            rows: Square nested sequence of numbers
            symmetrize: Replace the matrix by (Q + Q^T)/2 instead of rejecting asymmetry
            variable_order: MSB_FIRST when row 0 belongs to x_{n-1}, as matrices are usually printed

        Returns:
            QuboMatrix: The validated matrix in variable-index order
        """
        try:
            matrix = np.array(rows, dtype=np.float64)
        except ValueError as e:
            raise InvalidProblemError(f"QUBO matrix rows are ragged: {e}") from e
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidProblemError(f"QUBO matrix must be square, got {matrix.shape}")
        if variable_order == VariableOrder.MSB_FIRST:
            matrix = matrix[::-1, ::-1]
        if symmetrize:
            matrix = (matrix + matrix.T) / 2
        return cls(n=matrix.shape[0], matrix=matrix)

    def evaluate(self, x: BitString | int) -> float:
        value = x.value if isinstance(x, BitString) else x
        bits = np.array([(value >> j) & 1 for j in range(self.n)], dtype=np.float64)
        return float(bits @ self.matrix @ bits)


class PolynomialTerm(BaseModel):
    """
    A monomial coeff * x_{i_1} ... x_{i_l}; an empty index set is a constant.
    """

    model_config = ConfigDict(frozen=True)

    indices: tuple[int, ...] = Field(default=(), description="Distinct variable indices")
    coeff: float = Field(allow_inf_nan=False)

    @field_validator("indices", mode="before")
    @classmethod
    def _collapse(cls, v) -> tuple[int, ...]:
        # x_i^2 = x_i on the cube
        return tuple(sorted(set(v)))

    @property
    def mask(self) -> int:
        mask = 0
        for i in self.indices:
            mask |= 1 << i
        return mask

    @property
    def degree(self) -> int:
        return len(self.indices)


class PseudoBooleanPolynomial(BaseModel):
    """
    Order-m pseudo-Boolean objective F(x) = sum over terms of coeff * prod x_i.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Number of binary variables")
    terms: tuple[PolynomialTerm, ...] = Field(default=())

    @field_validator("terms", mode="after")
    @classmethod
    def _merge(cls, terms: tuple[PolynomialTerm, ...], info: ValidationInfo):
        n = info.data.get("n")
        merged: dict[tuple[int, ...], float] = {}
        for term in terms:
            if n is not None and any(i < 0 or i >= n for i in term.indices):
                raise InvalidProblemError(
                    f"term {list(term.indices)} uses a variable outside [0, {n})"
                )
            merged[term.indices] = merged.get(term.indices, 0.0) + term.coeff
        return tuple(
            PolynomialTerm(indices=indices, coeff=coeff)
            for indices, coeff in merged.items()
        )

    @classmethod
    def from_terms(
        cls, n: int, terms: Iterable[tuple[Iterable[int], float]]
    ) -> "PseudoBooleanPolynomial":
        return cls(
            n=n,
            terms=tuple(
                PolynomialTerm(indices=tuple(indices), coeff=coeff)
                for indices, coeff in terms
            ),
        )

    @property
    def degree(self) -> int:
        return max((term.degree for term in self.terms), default=0)

    def evaluate(self, x: BitString | int) -> float:
        value = x.value if isinstance(x, BitString) else x
        return float(
            sum(term.coeff for term in self.terms if (value & term.mask) == term.mask)
        )


def qubo_table(q: QuboMatrix) -> FunctionTable:
    """
    Dense table of B(x) = x^T Q x over the whole cube.
    """
    bits = bit_columns(q.n)
    values = np.einsum("ki,ij,kj->k", bits, q.matrix, bits)
    return FunctionTable(n=q.n, values=values)


def poly_table(p: PseudoBooleanPolynomial) -> FunctionTable:
    """
    Dense table of the polynomial over the whole cube.
    """
    indices = cube_indices(p.n)
    values = np.zeros(1 << p.n, dtype=np.float64)
    for term in p.terms:
        mask = term.mask
        values += term.coeff * ((indices & mask) == mask)
    return FunctionTable(n=p.n, values=values)
