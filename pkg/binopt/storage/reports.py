import csv
import io
from datetime import datetime
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, model_validator

from binopt.amplification.report import AARunReport
from binopt.common.enum import ProblemKind
from binopt.common.types import Bounds
from binopt.common.utils import format_bits
from binopt.config.logging import get_logger
from binopt.fourier.spectrum import FourierSpectrum

logger = get_logger(__name__)

HISTOGRAM_HEADER = ("x_binary", "F(x)", "p0", "pK", "ratio")


class ProblemEcho(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: ProblemKind
    n: int
    name: str | None = None
    source: str | None = None


class RunTiming(BaseModel):
    """Wall-clock data; left out of determinism comparisons."""

    model_config = ConfigDict(frozen=True)

    started_at: datetime
    wall_clock_seconds: float = Field(ge=0)


class ReportFile(BaseModel):
    """
    Everything an `amplify` run writes: the run report, the problem it was
    run on and the configuration in effect.
    """

    model_config = ConfigDict(frozen=True)

    tool_version: str
    problem: ProblemEcho
    bounds: Bounds
    config: dict[str, Any]
    report: AARunReport
    timing: RunTiming

    @model_validator(mode="after")
    def _check_coverage(self) -> "ReportFile":
        if self.report.n != self.problem.n:
            raise ValueError(
                f"report covers n={self.report.n}, problem has n={self.problem.n}"
            )
        return self

    def to_json(self, include_timing: bool = True) -> str:
        exclude = None if include_timing else {"timing"}
        return self.model_dump_json(indent=2, exclude=exclude)


class SpectrumEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    mask: int
    subset: list[int]
    coeff: float


class SpectrumFile(BaseModel):
    """Sparse spectrum as written by `fourier`, sorted by mask."""

    model_config = ConfigDict(frozen=True)

    n: int
    name: str | None = None
    entries: list[SpectrumEntry]

    @classmethod
    def from_spectrum(
        cls, spectrum: FourierSpectrum, name: str | None = None
    ) -> "SpectrumFile":
        return cls(
            n=spectrum.n,
            name=name,
            entries=[
                SpectrumEntry(mask=subset.mask, subset=subset.elements(), coeff=value)
                for subset, value in spectrum.entries()
            ],
        )

    def to_spectrum(self) -> FourierSpectrum:
        return FourierSpectrum(
            n=self.n, coeffs={entry.mask: entry.coeff for entry in self.entries}
        )


def histogram_rows(report: AARunReport) -> list[tuple[str, float, float, float, float]]:
    """
    One row per x: bits (MSB first), F(x), p0, pK and pK / p0.
    """
    return [
        (
            format_bits(x, report.n),
            report.values[x],
            report.p0[x],
            report.p_k[x],
            report.p_k[x] / report.p0[x],
        )
        for x in range(1 << report.n)
    ]


def format_histogram(report: AARunReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HISTOGRAM_HEADER)
    writer.writerows(
        (bits, repr(value), repr(p0), repr(p_k), repr(ratio))
        for bits, value, p0, p_k, ratio in histogram_rows(report)
    )
    return buffer.getvalue()


def write_text(path: Path, content: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content, encoding="utf-8")
    logger.info(f"Wrote {path}")
