from enum import Enum, IntEnum


class GateKind(Enum):
    X = "X"
    P = "P"
    CNOT = "CNOT"
    H = "H"


class ProblemKind(Enum):
    QUBO = "qubo"
    POLY = "poly"
    TABLE = "table"


class VariableOrder(Enum):
    LSB_FIRST = "lsb_first"
    MSB_FIRST = "msb_first"


class Direction(Enum):
    """Sign of the affine map into [0, scale]; plus favours minima, minus maxima."""

    PLUS = "plus"
    MINUS = "minus"


class Extremum(Enum):
    MIN = "min"
    MAX = "max"


class OracleKind(Enum):
    CIRCUIT = "circuit"
    DIAGONAL = "diagonal"


class RunMode(Enum):
    EXACT = "exact"
    SAMPLED = "sampled"


class ExitCode(IntEnum):
    SUCCESS = 0
    UNEXPECTED = 1
    PARSE_ERROR = 3
    INVALID_PROBLEM = 4
    DEGENERATE_OBJECTIVE = 5
    VERIFICATION_FAILED = 6
    LIMIT_EXCEEDED = 7
