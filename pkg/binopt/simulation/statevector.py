import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from binopt.common.enum import GateKind
from binopt.common.exceptions import (
    GateIndexError,
    InvalidLayoutError,
    NormDriftError,
    ZeroNormStateError,
)
from binopt.common.types import RealVector
from binopt.config.logging import get_logger
from binopt.config.settings import config
from binopt.simulation.gates import Circuit, GateOp, RegisterLayout

logger = get_logger(__name__)

_SQRT2_INV = 1 / np.sqrt(2)


class StateVector(BaseModel):
    """
    The 2^(n+1) complex amplitudes of H_W (x) H_A, indexed 2*x + a.

    Gates update `amps` in place; a state has a single writer while a circuit
    is being applied.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    layout: RegisterLayout
    amps: np.ndarray

    @field_validator("amps", mode="before")
    @classmethod
    def _as_array(cls, v) -> np.ndarray:
        return np.array(v, dtype=np.complex128)

    @model_validator(mode="after")
    def _check_shape(self) -> "StateVector":
        if self.amps.shape != (self.layout.dimension,):
            raise InvalidLayoutError(
                f"state for n={self.layout.n} needs {self.layout.dimension} amplitudes, got shape {self.amps.shape}"
            )
        return self

    def copy(self) -> "StateVector":
        return StateVector(layout=self.layout, amps=self.amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def apply_gate(self, gate: GateOp) -> "StateVector":
        total = self.layout.total
        if any(q >= total for q in gate.qubits):
            raise GateIndexError(f"{gate} addresses a qubit outside the {total}-qubit register")

        amps = self.amps
        if gate.kind == GateKind.CNOT:
            # one axis per qubit, most significant first
            tensor = amps.reshape((2,) * total)
            lower: list[int | slice] = [slice(None)] * total
            lower[total - 1 - gate.control] = 1
            lower[total - 1 - gate.target] = 0
            upper = list(lower)
            upper[total - 1 - gate.target] = 1
            flipped = tensor[tuple(lower)].copy()
            tensor[tuple(lower)] = tensor[tuple(upper)]
            tensor[tuple(upper)] = flipped
            return self

        # axis 1 of the view runs over the target bit
        pairs = amps.reshape(-1, 2, 1 << gate.target)
        zero = pairs[:, 0, :]
        one = pairs[:, 1, :]
        if gate.kind == GateKind.X:
            flipped = zero.copy()
            zero[...] = one
            one[...] = flipped
        elif gate.kind == GateKind.P:
            one *= np.exp(1j * gate.angle)
        elif gate.kind == GateKind.H:
            a = zero.copy()
            b = one.copy()
            zero[...] = (a + b) * _SQRT2_INV
            one[...] = (a - b) * _SQRT2_INV
        return self

    def apply_circuit(self, circuit: Circuit) -> "StateVector":
        """
        Apply the gates of circuit in order.

        Raises:
            InvalidLayoutError: If the circuit was built for another register.
            NormDriftError: If the norm moved by more than the configured tolerance.
        """
        if circuit.layout != self.layout:
            raise InvalidLayoutError(
                f"circuit for n={circuit.layout.n} applied to a state with n={self.layout.n}"
            )
        norm_before = self.norm()
        for gate in circuit.gates:
            self.apply_gate(gate)
        drift = abs(self.norm() - norm_before)
        if drift > config.simulation.norm_drift_tolerance:
            raise NormDriftError(
                f"norm drifted by {drift:.3e} over {len(circuit)} gates"
            )
        return self

    def ancilla_probability(self, outcome: int = 0) -> float:
        """Born probability of finding the ancilla in |outcome>."""
        return float(np.sum(np.abs(self.amps[outcome::2]) ** 2))

    def branch_divergence(self) -> float:
        """
        Largest difference between the work-register distributions conditioned
        on ancilla 0 and ancilla 1.
        """
        branch0 = np.abs(self.amps[0::2]) ** 2
        branch1 = np.abs(self.amps[1::2]) ** 2
        p0, p1 = branch0.sum(), branch1.sum()
        if p0 == 0.0 or p1 == 0.0:
            return 1.0
        return float(np.max(np.abs(branch0 / p0 - branch1 / p1)))

    def conjugate_symmetry_error(self) -> float:
        """max_x |amp(2x+1) - conj(amp(2x))|."""
        return float(np.max(np.abs(self.amps[1::2] - np.conj(self.amps[0::2]))))


def prepare_zero(layout: RegisterLayout) -> StateVector:
    """
    |0>^(n+1).
    """
    amps = np.zeros(layout.dimension, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(layout=layout, amps=amps)


def random_state(layout: RegisterLayout, rng: np.random.Generator) -> StateVector:
    """
    Normalized state with independent complex Gaussian amplitudes.
    """
    amps = rng.normal(size=layout.dimension) + 1j * rng.normal(size=layout.dimension)
    return StateVector(layout=layout, amps=amps / np.linalg.norm(amps))


def work_probabilities(state: StateVector) -> RealVector:
    """
    p(x) = |amp(2x)|^2 + |amp(2x+1)|^2.
    """
    probs = np.abs(state.amps) ** 2
    return probs[0::2] + probs[1::2]


def make_rng(seed: int | None) -> np.random.Generator:
    """
    Generator built on the configured bit generator (PCG64 by default).
    """
    bit_generator = getattr(np.random, config.simulation.measurement_rng)
    return np.random.Generator(bit_generator(seed))


def measure_qubit(
    state: StateVector, qubit: int, rng: np.random.Generator | int
) -> tuple[int, StateVector]:
    """
    Projective measurement of one qubit in the computational basis.

    Args:
        state: State to measure; left untouched
        qubit: Combined-register index (0 is the ancilla)
        rng: Generator or integer seed

    Returns:
        The outcome bit and the renormalized post-measurement state
    """
    if not 0 <= qubit < state.layout.total:
        raise GateIndexError(f"cannot measure qubit {qubit} of a {state.layout.total}-qubit register")
    if not isinstance(rng, np.random.Generator):
        rng = make_rng(rng)

    probs = np.abs(state.amps) ** 2
    total = probs.sum()
    if total <= 0.0:
        raise ZeroNormStateError("cannot measure a state with zero norm")

    bits = (np.arange(state.layout.dimension) >> qubit) & 1
    p_one = probs[bits == 1].sum() / total
    outcome = int(rng.random() < p_one)
    p_outcome = p_one if outcome else 1.0 - p_one

    amps = np.where(bits == outcome, state.amps, 0.0) / np.sqrt(p_outcome * total)
    logger.debug(f"Measured qubit {qubit}: outcome {outcome} (p={p_outcome:.6f})")
    return outcome, StateVector(layout=state.layout, amps=amps)


def sample_work_register(
    state: StateVector, shots: int, rng: np.random.Generator
) -> RealVector:
    """
    Relative frequencies of `shots` computational-basis measurements of H_W.
    """
    probs = work_probabilities(state)
    counts = rng.multinomial(shots, probs / probs.sum())
    return counts / shots
