import numpy as np

from binopt.common.exceptions import OracleVerificationError, WidthMismatchError
from binopt.config.logging import get_logger
from binopt.config.settings import config
from binopt.fourier.functions import FunctionTable
from binopt.simulation.gates import Circuit
from binopt.simulation.statevector import StateVector, make_rng, random_state

logger = get_logger(__name__)


def reference_oracle_apply(
    f: FunctionTable, state: StateVector, sign: int = 1
) -> StateVector:
    """
    Apply U_f (sign=+1) or U_f^dagger (sign=-1) as a diagonal, without gates.

    The amplitude at 2x + a is multiplied by e^{i sign (1 - 2a) f(x)}.
    """
    if f.n != state.layout.n:
        raise WidthMismatchError(
            f"function over {f.n} bits applied to a {state.layout.n}-qubit work register"
        )
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    phases = np.exp(1j * sign * f.values)
    state.amps[0::2] *= phases
    state.amps[1::2] *= np.conj(phases)
    return state


def oracle_deviation(
    circuit: Circuit, f: FunctionTable, seed: int | None = 0
) -> float:
    """
    Largest per-amplitude difference between the synthesized circuit and the
    diagonal reference on one random normalized input state.
    """
    layout = circuit.layout
    start = random_state(layout, make_rng(seed))
    from_circuit = start.copy().apply_circuit(circuit)
    from_diagonal = reference_oracle_apply(f, start.copy(), sign=1)
    deviation = float(np.max(np.abs(from_circuit.amps - from_diagonal.amps)))
    logger.debug(f"Oracle deviation for n={layout.n}: {deviation:.3e}")
    return deviation


def verify_oracle(
    circuit: Circuit,
    f: FunctionTable,
    tolerance: float | None = None,
    seed: int | None = 0,
) -> float:
    """
    Check a synthesized oracle against the diagonal reference.

    Returns:
        float: The observed deviation

    Raises:
        OracleVerificationError: If the deviation exceeds tolerance.
    """
    tolerance = config.verify_tolerance if tolerance is None else tolerance
    deviation = oracle_deviation(circuit, f, seed)
    if deviation > tolerance:
        raise OracleVerificationError(
            f"oracle deviates from the diagonal reference by {deviation:.3e} (tolerance {tolerance:.1e})"
        )
    return deviation
