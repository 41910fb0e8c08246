"""Structured validation findings shared by every pipeline stage."""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field


ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding, optionally anchored to a table row/column."""

    severity: str
    code: str
    message: str
    row: int | None = None
    column: str | None = None

    def sort_key(self) -> tuple:
        # Coordinate-less entries sort after row-anchored ones.
        return (
            self.row is None,
            self.row or 0,
            self.column is None,
            self.column or "",
            self.code,
        )

    def format(self) -> str:
        where = []
        if self.row is not None:
            where.append(f"row {self.row}")
        if self.column is not None:
            where.append(f"column '{self.column}'")
        location = ", ".join(where)
        prefix = f"{self.severity} [{self.code}]"
        if location:
            return f"{prefix} {location}: {self.message}"
        return f"{prefix}: {self.message}"


@dataclass
class DiagnosticsReport:
    """Accumulates diagnostics, kept ordered by (row, column, code)."""

    entries: list[Diagnostic] = field(default_factory=list)
    _seen: set[Diagnostic] = field(default_factory=set, repr=False)

    def add(self, diag: Diagnostic) -> None:
        # Identical findings from different stages collapse into one.
        if diag in self._seen:
            return
        self._seen.add(diag)
        bisect.insort(self.entries, diag, key=Diagnostic.sort_key)

    def error(self, code: str, message: str, row: int | None = None,
              column: str | None = None) -> None:
        self.add(Diagnostic(ERROR, code, message, row, column))

    def warning(self, code: str, message: str, row: int | None = None,
                column: str | None = None) -> None:
        self.add(Diagnostic(WARNING, code, message, row, column))

    def merge(self, other: "DiagnosticsReport") -> None:
        for diag in other.entries:
            self.add(diag)

    @property
    def error_count(self) -> int:
        return sum(1 for d in self.entries if d.severity == ERROR)

    @property
    def warning_count(self) -> int:
        return sum(1 for d in self.entries if d.severity == WARNING)

    @property
    def has_errors(self) -> bool:
        return any(d.severity == ERROR for d in self.entries)

    def summary(self) -> str:
        errors = self.error_count
        warnings = self.warning_count
        e = "error" if errors == 1 else "errors"
        w = "warning" if warnings == 1 else "warnings"
        return f"{errors} {e}, {warnings} {w}"

    def format_text(self) -> str:
        lines = [d.format() for d in self.entries]
        lines.append(self.summary())
        return "\n".join(lines)

    def to_payload(self) -> dict:
        """JSON-ready view of the report."""
        entries = []
        for d in self.entries:
            entry: dict = {"severity": d.severity, "code": d.code, "message": d.message}
            if d.row is not None:
                entry["row"] = d.row
            if d.column is not None:
                entry["column"] = d.column
            entries.append(entry)
        return {
            "errors": self.error_count,
            "warnings": self.warning_count,
            "entries": entries,
        }
