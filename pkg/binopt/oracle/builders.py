"""
Gate-level synthesis of the conditional oracle U_f.

U_f acts as e^{i f(x)} on |x>|0> and e^{-i f(x)} on |x>|1>. Expanding f in
parity functions, e^{i f(x)} = prod_S e^{i f-hat(S) chi_S(x)}, so U_f is the
product of one block U_S(f-hat(S)) per nonzero coefficient. Each block is

    U_S(alpha) = U_parity(S) . CM1(alpha) . CM0(alpha) . U_parity(S)

where U_parity(S) = R_S^dagger V_S R_S writes S-hat . x into the ancilla.
"""

from collections.abc import Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from binopt.common.exceptions import WidthMismatchError
from binopt.config.logging import get_logger
from binopt.fourier.bits import SubsetMask
from binopt.fourier.spectrum import FourierSpectrum
from binopt.simulation.gates import ANCILLA, Circuit, GateOp, RegisterLayout

logger = get_logger(__name__)


class OracleBuild(BaseModel):
    """
    A synthesized U_f together with the spectrum it realizes.

    `subset_order` lists the masks in the order their U_S blocks were emitted.
    """

    model_config = ConfigDict(frozen=True)

    spectrum: FourierSpectrum
    circuit: Circuit
    gate_count: int
    subset_order: tuple[int, ...]

    @model_validator(mode="after")
    def _check_counts(self) -> "OracleBuild":
        if self.gate_count != len(self.circuit):
            raise ValueError(
                f"gate_count {self.gate_count} disagrees with circuit length {len(self.circuit)}"
            )
        if sorted(self.subset_order) != sorted(self.spectrum.masks):
            raise ValueError("subset_order must list every stored coefficient once")
        return self


def _check_width(subset: SubsetMask, layout: RegisterLayout) -> None:
    if subset.n != layout.n:
        raise WidthMismatchError(
            f"subset over {subset.n} elements used with a {layout.n}-qubit work register"
        )


def build_R_S(subset: SubsetMask, layout: RegisterLayout) -> Circuit:
    """
    CNOT cascade leaving S-hat . x on work qubit j_1 (the smallest element).

    Gates run from (j_|S| -> j_|S|-1) down to (j_2 -> j_1); empty for |S| <= 1.
    """
    _check_width(subset, layout)
    elements = subset.elements()
    gates = tuple(
        GateOp.cnot(
            control=RegisterLayout.work_qubit(elements[k + 1]),
            target=RegisterLayout.work_qubit(elements[k]),
        )
        for k in reversed(range(len(elements) - 1))
    )
    return Circuit(layout=layout, gates=gates)


def build_V_S(subset: SubsetMask, layout: RegisterLayout) -> Circuit:
    """
    CNOT from work qubit j_1 onto the ancilla; empty for S = {}.
    """
    _check_width(subset, layout)
    if subset.mask == 0:
        return Circuit(layout=layout)
    first = subset.elements()[0]
    return Circuit(
        layout=layout,
        gates=(GateOp.cnot(control=RegisterLayout.work_qubit(first), target=ANCILLA),),
    )


def build_U_parity(subset: SubsetMask, layout: RegisterLayout) -> Circuit:
    """
    |x>|a> -> |x>|a xor S-hat . x>, as R_S, then V_S, then R_S reversed.
    """
    r_s = build_R_S(subset, layout)
    return r_s + build_V_S(subset, layout) + r_s.reversed()


def build_CM0(alpha: float, layout: RegisterLayout) -> Circuit:
    """
    Phase e^{i alpha} on ancilla |0>: X P(alpha) X.
    """
    return Circuit(
        layout=layout,
        gates=(GateOp.x(ANCILLA), GateOp.p(ANCILLA, alpha), GateOp.x(ANCILLA)),
    )


def build_CM1(alpha: float, layout: RegisterLayout) -> Circuit:
    """
    Phase e^{-i alpha} on ancilla |1>: P(-alpha).
    """
    return Circuit(layout=layout, gates=(GateOp.p(ANCILLA, -alpha),))


def build_U_S(subset: SubsetMask, alpha: float, layout: RegisterLayout) -> Circuit:
    """
    |x>|a> -> e^{i alpha (1 - 2a) chi_S(x)} |x>|a>.
    """
    parity = build_U_parity(subset, layout)
    return Circuit.concat(
        layout,
        [parity, build_CM0(alpha, layout), build_CM1(alpha, layout), parity],
    )


def expected_gate_count(spectrum: FourierSpectrum) -> int:
    """
    Gates emitted by build_U_f: per stored S, two parity blocks of
    2 (|S| - 1) + 1 CNOTs (none for S = {}) and four phase-multiplication gates.
    """
    count = 0
    for mask in spectrum.masks:
        size = mask.bit_count()
        parity_gates = 2 * max(size - 1, 0) + (1 if size >= 1 else 0)
        count += 2 * parity_gates + 4
    return count


def build_U_f(
    spectrum: FourierSpectrum,
    layout: RegisterLayout,
    order: Sequence[int] | None = None,
) -> OracleBuild:
    """
    Synthesize U_f as the product of U_S(f-hat(S)) over the stored coefficients.

    Args:
        spectrum: Fourier coefficients of f
        layout: Register the circuit acts on
        order: Emission order of the subset masks; ascending mask when omitted

    Returns:
        OracleBuild: Circuit, gate count and emission order
    """
    if spectrum.n != layout.n:
        raise WidthMismatchError(
            f"spectrum over {spectrum.n} bits used with a {layout.n}-qubit work register"
        )
    subset_order = tuple(spectrum.masks if order is None else order)

    blocks = [
        build_U_S(
            SubsetMask(n=spectrum.n, mask=mask), spectrum.coefficient(mask), layout
        )
        for mask in subset_order
    ]
    circuit = Circuit.concat(layout, blocks)
    logger.debug(
        f"Built U_f for n={layout.n}: {len(blocks)} blocks, {len(circuit)} gates"
    )
    return OracleBuild(
        spectrum=spectrum,
        circuit=circuit,
        gate_count=len(circuit),
        subset_order=subset_order,
    )


def build_U_f_dagger(
    spectrum: FourierSpectrum,
    layout: RegisterLayout,
    order: Sequence[int] | None = None,
) -> OracleBuild:
    """
    U_f^dagger = U_{-f}: the same construction on the negated spectrum.
    """
    return build_U_f(spectrum.negated(), layout, order)
