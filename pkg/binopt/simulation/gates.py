from pydantic import BaseModel, ConfigDict, Field, model_validator

from binopt.common.enum import GateKind
from binopt.common.exceptions import (
    GateIndexError,
    InvalidGateError,
    InvalidLayoutError,
)


class RegisterLayout(BaseModel):
    """
    The (n+1)-qubit register H_W (x) H_A.

    Combined qubit 0 is the ancilla and combined qubit j+1 is work qubit j, so
    the basis state |x> (x) |a> sits at amplitude index 2*x + a.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(description="Number of work qubits")

    @model_validator(mode="after")
    def _check_n(self) -> "RegisterLayout":
        if self.n < 1:
            raise InvalidLayoutError(f"register needs at least one work qubit, got n={self.n}")
        return self

    @property
    def total(self) -> int:
        return self.n + 1

    @property
    def dimension(self) -> int:
        return 1 << self.total

    @staticmethod
    def index(x: int, a: int) -> int:
        return 2 * x + a

    @staticmethod
    def split(index: int) -> tuple[int, int]:
        """Inverse of index(): amplitude index -> (x, a)."""
        return index >> 1, index & 1

    @staticmethod
    def work_qubit(j: int) -> int:
        """Combined-register index of work qubit j."""
        return j + 1


ANCILLA = 0


class GateOp(BaseModel):
    """
    One elementary gate on the combined register.

    X, P and H act on `target`; CNOT flips `target` conditioned on `control`.
    P(alpha) = |0><0| + e^{i alpha}|1><1|.
    """

    model_config = ConfigDict(frozen=True)

    kind: GateKind
    target: int = Field(ge=0)
    control: int | None = Field(default=None, ge=0)
    angle: float | None = Field(default=None, allow_inf_nan=False)

    @model_validator(mode="after")
    def _check_operands(self) -> "GateOp":
        if self.kind == GateKind.CNOT:
            if self.control is None:
                raise InvalidGateError("CNOT needs a control qubit")
            if self.control == self.target:
                raise InvalidGateError(f"CNOT control and target are both {self.target}")
        elif self.control is not None:
            raise InvalidGateError(f"{self.kind.value} gate takes no control qubit")
        if self.kind == GateKind.P and self.angle is None:
            raise InvalidGateError("phase gate needs an angle")
        if self.kind != GateKind.P and self.angle is not None:
            raise InvalidGateError(f"{self.kind.value} gate takes no angle")
        return self

    @classmethod
    def x(cls, target: int) -> "GateOp":
        return cls(kind=GateKind.X, target=target)

    @classmethod
    def p(cls, target: int, angle: float) -> "GateOp":
        return cls(kind=GateKind.P, target=target, angle=angle)

    @classmethod
    def cnot(cls, control: int, target: int) -> "GateOp":
        return cls(kind=GateKind.CNOT, control=control, target=target)

    @classmethod
    def h(cls, target: int) -> "GateOp":
        return cls(kind=GateKind.H, target=target)

    @property
    def qubits(self) -> tuple[int, ...]:
        if self.control is None:
            return (self.target,)
        return (self.control, self.target)

    def __str__(self) -> str:
        if self.kind == GateKind.CNOT:
            return f"CNOT {self.control} {self.target}"
        if self.kind == GateKind.P:
            return f"P {self.target} {self.angle:.17g}"
        return f"{self.kind.value} {self.target}"


class Circuit(BaseModel):
    """
    Ordered gate list; gates are applied to the state from left to right.
    """

    model_config = ConfigDict(frozen=True)

    layout: RegisterLayout
    gates: tuple[GateOp, ...] = ()

    @model_validator(mode="after")
    def _check_indices(self) -> "Circuit":
        total = self.layout.total
        for position, gate in enumerate(self.gates):
            if any(q >= total for q in gate.qubits):
                raise GateIndexError(
                    f"gate {position} ({gate}) addresses a qubit outside the {total}-qubit register"
                )
        return self

    def __len__(self) -> int:
        return len(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        if other.layout != self.layout:
            raise InvalidLayoutError(
                f"cannot concatenate circuits on n={self.layout.n} and n={other.layout.n}"
            )
        return Circuit(layout=self.layout, gates=self.gates + other.gates)

    def reversed(self) -> "Circuit":
        """Same gates in reverse order; the inverse when every gate is self-inverse."""
        return Circuit(layout=self.layout, gates=self.gates[::-1])

    @classmethod
    def concat(cls, layout: RegisterLayout, circuits: list["Circuit"]) -> "Circuit":
        gates: list[GateOp] = []
        for circuit in circuits:
            if circuit.layout != layout:
                raise InvalidLayoutError(
                    f"circuit on n={circuit.layout.n} in a concatenation for n={layout.n}"
                )
            gates.extend(circuit.gates)
        return cls(layout=layout, gates=tuple(gates))


def hadamard_all(layout: RegisterLayout) -> Circuit:
    """
    H on every qubit of the register, ancilla first.
    """
    return Circuit(
        layout=layout, gates=tuple(GateOp.h(q) for q in range(layout.total))
    )
