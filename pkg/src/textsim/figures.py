"""Grouped-bar rendering of a benchmark report to a PNG file.

Uses the Agg backend explicitly so rendering works headless; N/A cells
simply have no bar.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .report import COLUMNS, ReportTable


def render_report_chart(table: ReportTable, path: str | Path) -> None:
    """Write a grouped bar chart, one group per column, one bar per method."""
    n_cols = len(COLUMNS)
    n_methods = max(1, len(table.methods))
    x = np.arange(n_cols, dtype=float)
    width = 0.8 / n_methods

    fig, ax = plt.subplots(figsize=(max(8.0, 1.6 * n_cols), 4.5))
    for k, (method, values) in enumerate(table.rows()):
        offsets = x - 0.4 + (k + 0.5) * width
        heights = [100.0 * v if v is not None else 0.0 for v in values]
        shown = [not (v is None) for v in values]
        ax.bar([o for o, s in zip(offsets, shown) if s],
               [h for h, s in zip(heights, shown) if s],
               width=width, label=method)
    ax.set_xticks(x)
    ax.set_xticklabels(COLUMNS, rotation=20, ha="right", fontsize=8)
    ax.set_ylabel("score (%)")
    ax.set_title("Benchmark results")
    if table.methods:
        ax.legend(fontsize=8)
    ax.grid(axis="y", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
