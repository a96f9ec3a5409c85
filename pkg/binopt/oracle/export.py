"""
Plain-text gate lists.

    layout n=<n> ancilla=0
    X <q>
    P <q> <alpha>
    CNOT <control> <target>
    H <q>

Angles are written with 17 significant digits so a list read back reproduces
the circuit exactly. Blank lines and lines starting with '#' are ignored.
"""

import re

from binopt.common.enum import GateKind
from binopt.common.exceptions import InvalidGateError, ProblemFileError
from binopt.simulation.gates import ANCILLA, Circuit, GateOp, RegisterLayout

_HEADER = re.compile(r"^layout n=(\d+) ancilla=(\d+)$")


def format_gate_list(circuit: Circuit) -> str:
    lines = [f"layout n={circuit.layout.n} ancilla={ANCILLA}"]
    lines.extend(str(gate) for gate in circuit.gates)
    return "\n".join(lines) + "\n"


def parse_gate_list(text: str, source: str | None = None) -> Circuit:
    """
    Read a gate list written by format_gate_list.

    Raises:
        ProblemFileError: With the offending line number.
    """
    layout: RegisterLayout | None = None
    gates: list[GateOp] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if layout is None:
            header = _HEADER.match(line)
            if header is None:
                raise ProblemFileError(
                    f"expected 'layout n=<n> ancilla=0', got {line!r}",
                    path=source,
                    line=line_number,
                )
            if int(header.group(2)) != ANCILLA:
                raise ProblemFileError(
                    "only ancilla=0 layouts are supported", path=source, line=line_number
                )
            n = int(header.group(1))
            if n < 1:
                raise ProblemFileError(
                    "layout needs at least one work qubit", path=source, line=line_number
                )
            layout = RegisterLayout(n=n)
            continue
        gate = _parse_gate(line, source, line_number)
        if any(q >= layout.total for q in gate.qubits):
            raise ProblemFileError(
                f"{gate} addresses a qubit outside the {layout.total}-qubit register",
                path=source,
                line=line_number,
            )
        gates.append(gate)

    if layout is None:
        raise ProblemFileError("gate list has no layout header", path=source)
    return Circuit(layout=layout, gates=tuple(gates))


def _parse_gate(line: str, source: str | None, line_number: int) -> GateOp:
    name, *operands = line.split()
    try:
        kind = GateKind(name)
        if kind == GateKind.CNOT:
            control, target = operands
            return GateOp.cnot(int(control), int(target))
        if kind == GateKind.P:
            target, angle = operands
            return GateOp.p(int(target), float(angle))
        (target,) = operands
        return GateOp(kind=kind, target=int(target))
    except (ValueError, InvalidGateError) as e:
        raise ProblemFileError(
            f"malformed gate {line!r}: {e}", path=source, line=line_number
        ) from e
