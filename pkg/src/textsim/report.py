"""Benchmark result table with fixed columns and two text renderings.

The column set mirrors the evaluation protocol: Pearson and Spearman on
the relatedness task, accuracy on the entailment task, Pearson and
Spearman on argument similarity, and accuracy on the paraphrase task.
A cell holds a fraction in [-1, 1] or None for "not applicable"; both
renderings show fractions as percentages with three decimals.
"""

from __future__ import annotations

from dataclasses import dataclass, field

COLUMNS = (
    "SICK-R Pearson",
    "SICK-R Spearman",
    "SICK-E Accuracy",
    "AFS Pearson",
    "AFS Spearman",
    "MRPC Accuracy",
)


def format_cell(value: float | None) -> str:
    if value is None:
        return "N/A"
    return f"{100.0 * value:.3f}%"


@dataclass
class ReportTable:
    methods: list[str] = field(default_factory=list)
    cells: dict[tuple[str, str], float | None] = field(default_factory=dict)

    def add_method(self, method: str) -> None:
        if method in self.methods:
            raise ValueError(f"duplicate method name {method!r}")
        self.methods.append(method)
        for col in COLUMNS:
            self.cells[(method, col)] = None

    def set_cell(self, method: str, column: str, value: float | None) -> None:
        if method not in self.methods:
            raise ValueError(f"unknown method {method!r}")
        if column not in COLUMNS:
            raise ValueError(f"unknown column {column!r}")
        self.cells[(method, column)] = value

    def get_cell(self, method: str, column: str) -> float | None:
        return self.cells[(method, column)]

    def rows(self) -> list[tuple[str, list[float | None]]]:
        return [(m, [self.cells[(m, c)] for c in COLUMNS]) for m in self.methods]

    def to_markdown(self) -> str:
        lines = ["| Method | " + " | ".join(COLUMNS) + " |",
                 "|" + " --- |" * (len(COLUMNS) + 1)]
        for method, values in self.rows():
            rendered = " | ".join(format_cell(v) for v in values)
            lines.append(f"| {method} | {rendered} |")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        lines = ["method," + ",".join(COLUMNS)]
        for method, values in self.rows():
            lines.append(method + "," + ",".join(format_cell(v) for v in values))
        return "\n".join(lines) + "\n"
