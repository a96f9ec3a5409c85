class BinoptError(Exception):
    """Base class for all binopt errors."""

    pass


class WidthMismatchError(BinoptError):
    """Custom exception for operands defined on cubes of different dimension."""

    pass


class InvalidLayoutError(BinoptError):
    """Custom exception for register layouts without work qubits."""

    pass


class InvalidGateError(BinoptError):
    """Custom exception for malformed gates (e.g. CNOT with control == target)."""

    pass


class GateIndexError(BinoptError):
    """Custom exception for gates addressing qubits outside the register."""

    pass


class InvalidProblemError(BinoptError):
    """Custom exception for problem data with inconsistent dimensions or values."""

    pass


class AsymmetricMatrixError(InvalidProblemError):
    """Custom exception for QUBO matrices that are not symmetric."""

    pass


class ScalingError(BinoptError):
    """Custom exception for invalid bounds or scale passed to the objective scaling."""

    pass


class DegenerateObjectiveError(BinoptError):
    """Custom exception for constant objectives, which cannot be amplified."""

    pass


class DegenerateThetaError(DegenerateObjectiveError):
    """Custom exception for theta at (or too close to) 0 or pi."""

    pass


class ThetaDomainError(BinoptError):
    """Custom exception for cos(theta) falling outside [-1, 1] beyond tolerance."""

    pass


class IterationCapExceeded(BinoptError):
    """Custom exception for iteration counts above the configured cap."""

    pass


class NormDriftError(BinoptError):
    """Custom exception for statevectors whose norm drifted after a circuit."""

    pass


class ZeroNormStateError(BinoptError):
    """Custom exception for measuring a state with vanishing norm."""

    pass


class SimulationLimitExceeded(BinoptError):
    """Custom exception for problems larger than the configured simulation limit."""

    pass


class OracleVerificationError(BinoptError):
    """Custom exception for synthesized oracles that deviate from the diagonal reference."""

    pass


class ProblemFileError(BinoptError):
    """Custom exception for problem files that cannot be parsed."""

    def __init__(
        self,
        message: str,
        path: str | None = None,
        line: int | None = None,
        field: str | None = None,
    ):
        self.path = path
        self.line = line
        self.field = field
        location = path or "<problem>"
        if line is not None:
            location = f"{location}:{line}"
        if field:
            location = f"{location} [{field}]"
        super().__init__(f"{location}: {message}")
