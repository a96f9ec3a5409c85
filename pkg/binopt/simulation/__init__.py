from binopt.simulation.gates import (
    ANCILLA,
    Circuit,
    GateOp,
    RegisterLayout,
    hadamard_all,
)
from binopt.simulation.statevector import (
    StateVector,
    make_rng,
    measure_qubit,
    prepare_zero,
    random_state,
    sample_work_register,
    work_probabilities,
)

__all__ = [
    "ANCILLA",
    "Circuit",
    "GateOp",
    "RegisterLayout",
    "StateVector",
    "hadamard_all",
    "make_rng",
    "measure_qubit",
    "prepare_zero",
    "random_state",
    "sample_work_register",
    "work_probabilities",
]
