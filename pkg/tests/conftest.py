import math
from pathlib import Path

import numpy as np
import pytest

from binopt.common.enum import VariableOrder
from binopt.fourier.functions import FunctionTable, QuboMatrix, qubo_table

FIXTURES_DIR = Path(__file__).parent.parent / "fixtures"

# rows and columns ordered x3, x2, x1, x0
GLOVER_ROWS = [
    [-5, 2, 4, 0],
    [2, -3, 1, 0],
    [4, 1, -8, 5],
    [0, 0, 5, -6],
]


@pytest.fixture
def glover_qubo() -> QuboMatrix:
    return QuboMatrix.from_rows(GLOVER_ROWS, variable_order=VariableOrder.MSB_FIRST)


@pytest.fixture
def glover_table(glover_qubo: QuboMatrix) -> FunctionTable:
    return qubo_table(glover_qubo)


@pytest.fixture
def glover_bounds() -> tuple[float, float]:
    return (-22.0, 24.0)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def random_table(rng: np.random.Generator):
    """Factory for random functions on {0,1}^n with values in [0, high]."""

    def make(n: int, high: float = math.pi / 2) -> FunctionTable:
        return FunctionTable(n=n, values=rng.uniform(0.0, high, size=1 << n))

    return make
