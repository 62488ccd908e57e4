"""Machine-readable findings from parsing and validating scripts."""
from __future__ import annotations

from dataclasses import dataclass

# Stable codes: the retry loop and its tests key on these strings.
CODES = frozenset(
    {
        "UnknownComponent",
        "UnknownPort",
        "SliderMisuse",
        "KindMismatch",
        "CycleCreated",
        "MissingRequiredInput",
        "ParseError",
        "DuplicateNodeId",
        "BadLiteral",
        "InputOccupied",
        "EvaluationError",
    }
)

SEVERITIES = ("error", "warning")


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    code: str
    message: str
    line: int
    column: int = 1
    ident: str = ""

    def __post_init__(self):
        if self.severity not in SEVERITIES:
            raise ValueError(f"bad severity {self.severity!r}")
        if self.code not in CODES:
            raise ValueError(f"unknown diagnostic code {self.code!r}")
        if self.line < 1 or self.column < 1:
            raise ValueError("diagnostics carry 1-based source locations")

    def render(self) -> str:
        tag = "" if self.severity == "error" else " (warning)"
        return f"line {self.line}, col {self.column}: {self.code}{tag}: {self.message}"


def errors_only(diagnostics: list[Diagnostic]) -> list[Diagnostic]:
    return [d for d in diagnostics if d.severity == "error"]


__all__ = ["CODES", "Diagnostic", "SEVERITIES", "errors_only"]
