from binopt.storage.problem_file import (
    PolyProblem,
    ProblemFile,
    QuboProblem,
    TableProblem,
    load_problem,
    parse_problem,
)
from binopt.storage.reports import (
    HISTOGRAM_HEADER,
    ProblemEcho,
    ReportFile,
    RunTiming,
    SpectrumEntry,
    SpectrumFile,
    format_histogram,
    histogram_rows,
    write_text,
)

__all__ = [
    "HISTOGRAM_HEADER",
    "PolyProblem",
    "ProblemEcho",
    "ProblemFile",
    "QuboProblem",
    "ReportFile",
    "RunTiming",
    "SpectrumEntry",
    "SpectrumFile",
    "TableProblem",
    "format_histogram",
    "histogram_rows",
    "load_problem",
    "parse_problem",
    "write_text",
]
