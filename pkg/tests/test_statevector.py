import numpy as np
import pytest

from binopt.common.enum import GateKind
from binopt.common.exceptions import (
    GateIndexError,
    InvalidGateError,
    InvalidLayoutError,
    ZeroNormStateError,
)
from binopt.simulation import (
    ANCILLA,
    Circuit,
    GateOp,
    RegisterLayout,
    StateVector,
    hadamard_all,
    make_rng,
    measure_qubit,
    prepare_zero,
    random_state,
    sample_work_register,
    work_probabilities,
)

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def _single_qubit_matrix(u: np.ndarray, qubit: int, total: int) -> np.ndarray:
    # qubit q is bit q of the amplitude index, so it is the q-th factor from the right
    matrix = np.eye(1, dtype=complex)
    for q in reversed(range(total)):
        matrix = np.kron(matrix, u if q == qubit else np.eye(2))
    return matrix


def _gate_matrix(gate: GateOp, total: int) -> np.ndarray:
    if gate.kind == GateKind.CNOT:
        dim = 1 << total
        matrix = np.zeros((dim, dim), dtype=complex)
        for i in range(dim):
            j = i ^ (1 << gate.target) if (i >> gate.control) & 1 else i
            matrix[j, i] = 1.0
        return matrix
    if gate.kind == GateKind.P:
        u = np.diag([1.0, np.exp(1j * gate.angle)])
    elif gate.kind == GateKind.X:
        u = _X
    else:
        u = _H
    return _single_qubit_matrix(u, gate.target, total)


def _random_circuit(rng: np.random.Generator, layout: RegisterLayout, size: int) -> Circuit:
    gates = []
    for _ in range(size):
        kind = rng.choice(["X", "P", "H", "CNOT"])
        if kind == "CNOT":
            control, target = rng.choice(layout.total, size=2, replace=False)
            gates.append(GateOp.cnot(int(control), int(target)))
        elif kind == "P":
            gates.append(GateOp.p(int(rng.integers(layout.total)), float(rng.uniform(-np.pi, np.pi))))
        elif kind == "X":
            gates.append(GateOp.x(int(rng.integers(layout.total))))
        else:
            gates.append(GateOp.h(int(rng.integers(layout.total))))
    return Circuit(layout=layout, gates=tuple(gates))


class TestRegisterLayout:
    def test_dimensions(self):
        layout = RegisterLayout(n=3)
        assert layout.total == 4
        assert layout.dimension == 16
        assert RegisterLayout.work_qubit(0) == 1

    def test_index_and_split(self):
        assert RegisterLayout.index(5, 1) == 11
        assert RegisterLayout.split(11) == (5, 1)

    def test_needs_a_work_qubit(self):
        with pytest.raises(InvalidLayoutError):
            RegisterLayout(n=0)


class TestGates:
    def test_x_on_ancilla(self):
        state = prepare_zero(RegisterLayout(n=2)).apply_gate(GateOp.x(ANCILLA))
        np.testing.assert_array_equal(np.nonzero(state.amps)[0], [1])

    def test_x_on_work_qubit(self):
        state = prepare_zero(RegisterLayout(n=2)).apply_gate(GateOp.x(RegisterLayout.work_qubit(1)))
        # x = 0b10, a = 0
        assert state.amps[RegisterLayout.index(2, 0)] == 1.0

    def test_cnot_flips_target_when_control_set(self):
        layout = RegisterLayout(n=2)
        amps = np.zeros(layout.dimension, dtype=complex)
        amps[RegisterLayout.index(1, 0)] = 1.0
        state = StateVector(layout=layout, amps=amps).apply_gate(GateOp.cnot(1, ANCILLA))
        assert state.amps[RegisterLayout.index(1, 1)] == 1.0

    def test_phase_on_one(self):
        state = prepare_zero(RegisterLayout(n=1))
        state.apply_gate(GateOp.x(0)).apply_gate(GateOp.p(0, np.pi / 3))
        np.testing.assert_allclose(state.amps[1], np.exp(1j * np.pi / 3))

    def test_hadamard_all_is_uniform(self):
        layout = RegisterLayout(n=3)
        state = prepare_zero(layout).apply_circuit(hadamard_all(layout))
        np.testing.assert_allclose(state.amps, np.full(16, 0.25), atol=1e-15)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_random_circuits_match_dense_matrices(self, rng, n):
        layout = RegisterLayout(n=n)
        circuit = _random_circuit(rng, layout, 25)
        start = random_state(layout, rng)
        expected = start.amps.copy()
        for gate in circuit.gates:
            expected = _gate_matrix(gate, layout.total) @ expected
        result = start.copy().apply_circuit(circuit)
        np.testing.assert_allclose(result.amps, expected, atol=1e-12)
        assert abs(result.norm() - 1.0) < 1e-12

    def test_every_cnot_pair_matches_dense_matrix(self, rng):
        layout = RegisterLayout(n=4)
        for control in range(layout.total):
            for target in range(layout.total):
                if control == target:
                    continue
                gate = GateOp.cnot(control, target)
                start = random_state(layout, rng)
                expected = _gate_matrix(gate, layout.total) @ start.amps
                result = start.copy().apply_gate(gate)
                np.testing.assert_allclose(result.amps, expected, atol=1e-15)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_gate_inverses(self, rng, n):
        layout = RegisterLayout(n=n)
        for _ in range(10):
            start = random_state(layout, rng)
            qubit = int(rng.integers(layout.total))
            alpha = float(rng.uniform(-np.pi, np.pi))
            pairs = [
                (GateOp.p(qubit, alpha), GateOp.p(qubit, -alpha)),
                (GateOp.x(qubit), GateOp.x(qubit)),
                (GateOp.h(qubit), GateOp.h(qubit)),
            ]
            if layout.total > 1:
                control, target = rng.choice(layout.total, size=2, replace=False)
                cnot = GateOp.cnot(int(control), int(target))
                pairs.append((cnot, cnot))
            for gate, inverse in pairs:
                result = start.copy().apply_gate(gate).apply_gate(inverse)
                np.testing.assert_allclose(result.amps, start.amps, atol=1e-12)

    def test_reversed_self_inverse_circuit_undoes_it(self, rng):
        layout = RegisterLayout(n=3)
        gates = (GateOp.cnot(1, 2), GateOp.x(0), GateOp.h(3), GateOp.cnot(3, 0))
        circuit = Circuit(layout=layout, gates=gates)
        start = random_state(layout, rng)
        result = start.copy().apply_circuit(circuit).apply_circuit(circuit.reversed())
        np.testing.assert_allclose(result.amps, start.amps, atol=1e-12)


class TestGateValidation:
    def test_cnot_control_equals_target(self):
        with pytest.raises(InvalidGateError):
            GateOp.cnot(1, 1)

    def test_phase_needs_angle(self):
        with pytest.raises(InvalidGateError):
            GateOp(kind=GateKind.P, target=0)

    def test_x_takes_no_control(self):
        with pytest.raises(InvalidGateError):
            GateOp(kind=GateKind.X, target=0, control=1)

    def test_gate_outside_register(self):
        with pytest.raises(GateIndexError):
            Circuit(layout=RegisterLayout(n=1), gates=(GateOp.x(2),))
        with pytest.raises(GateIndexError):
            prepare_zero(RegisterLayout(n=1)).apply_gate(GateOp.x(2))

    def test_layout_mismatch(self):
        circuit = Circuit(layout=RegisterLayout(n=2), gates=(GateOp.x(0),))
        with pytest.raises(InvalidLayoutError):
            prepare_zero(RegisterLayout(n=1)).apply_circuit(circuit)
        with pytest.raises(InvalidLayoutError):
            circuit + Circuit(layout=RegisterLayout(n=1))

    def test_gate_text(self):
        assert str(GateOp.cnot(2, 0)) == "CNOT 2 0"
        assert str(GateOp.x(1)) == "X 1"
        assert str(GateOp.p(0, 0.5)) == "P 0 0.5"


class TestStateVector:
    def test_wrong_amplitude_count(self):
        with pytest.raises(InvalidLayoutError):
            StateVector(layout=RegisterLayout(n=1), amps=np.zeros(3))

    def test_copy_is_independent(self):
        state = prepare_zero(RegisterLayout(n=1))
        clone = state.copy()
        clone.apply_gate(GateOp.x(0))
        assert state.amps[0] == 1.0

    def test_work_probabilities_marginalize_ancilla(self):
        layout = RegisterLayout(n=1)
        state = StateVector(layout=layout, amps=np.array([0.5, 0.5, 0.5j, -0.5]))
        np.testing.assert_allclose(work_probabilities(state), [0.5, 0.5])

    def test_conjugate_symmetric_state_diagnostics(self, rng):
        layout = RegisterLayout(n=3)
        branch = rng.normal(size=8) + 1j * rng.normal(size=8)
        amps = np.empty(16, dtype=complex)
        amps[0::2] = branch
        amps[1::2] = np.conj(branch)
        state = StateVector(layout=layout, amps=amps / np.linalg.norm(amps))
        assert state.conjugate_symmetry_error() < 1e-15
        assert abs(state.ancilla_probability(0) - 0.5) < 1e-12
        assert state.branch_divergence() < 1e-12

    def test_random_state_is_normalized(self, rng):
        assert abs(random_state(RegisterLayout(n=4), rng).norm() - 1.0) < 1e-12


class TestMeasurement:
    def test_basis_state_is_deterministic(self):
        layout = RegisterLayout(n=2)
        state = prepare_zero(layout).apply_gate(GateOp.x(2))
        outcome, collapsed = measure_qubit(state, 2, 7)
        assert outcome == 1
        np.testing.assert_allclose(collapsed.amps, state.amps)
        assert measure_qubit(state, 1, 7)[0] == 0

    def test_collapse_renormalizes(self):
        layout = RegisterLayout(n=1)
        state = prepare_zero(layout).apply_circuit(hadamard_all(layout))
        outcome, collapsed = measure_qubit(state, ANCILLA, make_rng(3))
        assert abs(collapsed.norm() - 1.0) < 1e-12
        assert collapsed.ancilla_probability(outcome) == pytest.approx(1.0)
        # the input state is left alone
        np.testing.assert_allclose(state.amps, np.full(4, 0.5), atol=1e-15)

    def test_seeded_measurements_repeat(self):
        layout = RegisterLayout(n=2)
        state = prepare_zero(layout).apply_circuit(hadamard_all(layout))
        first = [measure_qubit(state, 0, make_rng(11))[0] for _ in range(5)]
        second = [measure_qubit(state, 0, make_rng(11))[0] for _ in range(5)]
        assert first == second

    def test_outcome_frequencies(self):
        layout = RegisterLayout(n=1)
        amps = np.array([np.sqrt(0.8), 0.0, np.sqrt(0.2), 0.0])
        state = StateVector(layout=layout, amps=amps)
        rng = make_rng(123)
        ones = sum(measure_qubit(state, 1, rng)[0] for _ in range(4000))
        assert 0.17 < ones / 4000 < 0.23

    def test_zero_state_cannot_be_measured(self):
        state = StateVector(layout=RegisterLayout(n=1), amps=np.zeros(4))
        with pytest.raises(ZeroNormStateError):
            measure_qubit(state, 0, 0)

    def test_measure_outside_register(self):
        with pytest.raises(GateIndexError):
            measure_qubit(prepare_zero(RegisterLayout(n=1)), 5, 0)

    def test_sampled_frequencies(self):
        layout = RegisterLayout(n=2)
        state = prepare_zero(layout).apply_circuit(hadamard_all(layout))
        frequencies = sample_work_register(state, 10_000, make_rng(5))
        assert frequencies.sum() == pytest.approx(1.0)
        np.testing.assert_allclose(frequencies, np.full(4, 0.25), atol=0.03)

    def test_configured_bit_generator(self):
        assert isinstance(make_rng(1).bit_generator, np.random.PCG64)
