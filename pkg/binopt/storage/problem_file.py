"""
YAML problem files.

    kind: qubo            # qubo | poly | table
    n: 4
    name: glover          # optional
    variable_order: msb_first   # qubo only; row 0 is x_{n-1}
    payload:
      - [-5, 2, 4, 0]
      ...

A poly payload is a list of {indices: [i, j, ...], coeff: c} (an empty index
list is the constant term); a table payload lists F(0) ... F(2^n - 1).
"""

from pathlib import Path
from typing import Annotated, Any, Literal

import yaml
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from binopt.common.enum import ProblemKind, VariableOrder
from binopt.common.exceptions import InvalidProblemError, ProblemFileError
from binopt.config.logging import get_logger
from binopt.config.settings import config
from binopt.fourier.functions import (
    FunctionTable,
    PolynomialTerm,
    PseudoBooleanPolynomial,
    QuboMatrix,
)

logger = get_logger(__name__)


class _Problem(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(ge=1, description="Number of binary variables")
    name: str | None = None

    @property
    def problem_kind(self) -> ProblemKind:
        return ProblemKind(getattr(self, "kind"))

    @property
    def label(self) -> str:
        return self.name or f"{self.problem_kind.value}-n{self.n}"


class QuboProblem(_Problem):
    kind: Literal["qubo"]
    variable_order: VariableOrder = VariableOrder.LSB_FIRST
    payload: list[list[float]] = Field(description="Matrix rows")

    def to_qubo(self, symmetrize: bool | None = None) -> QuboMatrix:
        """
        Raises:
            InvalidProblemError: If the matrix is not n x n.
            AsymmetricMatrixError: If the matrix is asymmetric and symmetrize is off.
        """
        symmetrize = config.symmetrize_qubo if symmetrize is None else symmetrize
        q = QuboMatrix.from_rows(
            self.payload, symmetrize=symmetrize, variable_order=self.variable_order
        )
        if q.n != self.n:
            raise InvalidProblemError(
                f"problem declares n={self.n} but the matrix is {q.n}x{q.n}"
            )
        return q


class PolyProblem(_Problem):
    kind: Literal["poly"]
    payload: list[PolynomialTerm] = Field(default_factory=list)

    def to_polynomial(self) -> PseudoBooleanPolynomial:
        return PseudoBooleanPolynomial(n=self.n, terms=tuple(self.payload))


class TableProblem(_Problem):
    kind: Literal["table"]
    payload: list[float] = Field(description="F(0) ... F(2^n - 1)")

    def to_table(self) -> FunctionTable:
        return FunctionTable(n=self.n, values=self.payload)


ProblemFile = Annotated[
    QuboProblem | PolyProblem | TableProblem, Field(discriminator="kind")
]

_problem_adapter: TypeAdapter[ProblemFile] = TypeAdapter(ProblemFile)


def _line_of(text: str, loc: tuple[Any, ...]) -> int | None:
    """1-based line of the YAML node at loc, or of its closest ancestor."""
    try:
        node = yaml.compose(text)
    except yaml.YAMLError:
        return None
    line = None
    for key in loc:
        if node is None:
            break
        line = node.start_mark.line + 1
        if isinstance(node, yaml.MappingNode):
            node = next((v for k, v in node.value if k.value == key), None)
        elif isinstance(node, yaml.SequenceNode) and isinstance(key, int):
            node = node.value[key] if key < len(node.value) else None
        else:
            node = None
    if node is not None:
        line = node.start_mark.line + 1
    return line


def _yaml_locations(loc: tuple[Any, ...]) -> tuple[Any, ...]:
    # the discriminated union puts the kind tag in front of the field path
    if loc and loc[0] in {kind.value for kind in ProblemKind}:
        return loc[1:]
    return loc


def parse_problem(text: str, source: str | None = None) -> ProblemFile:
    """
    Parse the text of a problem file.

    Raises:
        ProblemFileError: With line and field context.
    """
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise ProblemFileError(
            f"invalid YAML: {getattr(e, 'problem', e)}",
            path=source,
            line=mark.line + 1 if mark is not None else None,
        ) from e

    if not isinstance(raw, dict):
        raise ProblemFileError("top level must be a mapping", path=source, line=1)

    try:
        problem = _problem_adapter.validate_python(raw)
    except ValidationError as e:
        error = e.errors()[0]
        loc = _yaml_locations(tuple(error["loc"]))
        if error["type"].startswith("union_tag"):
            loc = ("kind",)
        raise ProblemFileError(
            error["msg"],
            path=source,
            line=_line_of(text, loc),
            field=".".join(str(part) for part in loc) or None,
        ) from e

    logger.debug(f"Parsed {problem.kind} problem '{problem.label}' with n={problem.n}")
    return problem


def load_problem(path: Path) -> ProblemFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ProblemFileError(f"cannot read file: {e.strerror}", path=str(path)) from e
    return parse_problem(text, source=str(path))
