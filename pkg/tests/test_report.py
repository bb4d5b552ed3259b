import csv
import io

import pytest

from textsim.figures import render_report_chart
from textsim.report import COLUMNS, ReportTable, format_cell


def test_fixed_column_set():
    assert COLUMNS == ("SICK-R Pearson", "SICK-R Spearman", "SICK-E Accuracy",
                       "AFS Pearson", "AFS Spearman", "MRPC Accuracy")


def test_format_cell():
    assert format_cell(0.70172) == "70.172%"
    assert format_cell(1.0) == "100.000%"
    assert format_cell(0.0) == "0.000%"
    assert format_cell(None) == "N/A"


def _sample_table():
    t = ReportTable()
    t.add_method("alpha")
    t.add_method("beta")
    t.set_cell("alpha", "MRPC Accuracy", 0.70172)
    t.set_cell("alpha", "AFS Pearson", 0.32273)
    t.set_cell("beta", "SICK-R Spearman", 0.75038)
    return t


def test_cells_default_to_na():
    t = _sample_table()
    assert t.get_cell("alpha", "SICK-E Accuracy") is None
    assert t.get_cell("alpha", "MRPC Accuracy") == 0.70172


def test_unknown_method_or_column():
    t = _sample_table()
    with pytest.raises(ValueError, match="unknown method"):
        t.set_cell("ghost", "MRPC Accuracy", 0.5)
    with pytest.raises(ValueError, match="unknown column"):
        t.set_cell("alpha", "Bogus Metric", 0.5)
    with pytest.raises(KeyError):
        t.get_cell("alpha", "Bogus Metric")


def test_duplicate_method_rejected():
    t = ReportTable()
    t.add_method("alpha")
    with pytest.raises(ValueError):
        t.add_method("alpha")


def test_rows_preserve_insertion_order():
    t = _sample_table()
    assert [name for name, _ in t.rows()] == ["alpha", "beta"]


def test_markdown_shape():
    md = _sample_table().to_markdown()
    lines = md.splitlines()
    assert lines[0].startswith("| Method |")
    assert all(c in lines[0] for c in COLUMNS)
    assert set(lines[1].replace("|", "").split()) == {"---"}
    assert len(lines) == 4
    assert "70.172%" in lines[2]
    assert "N/A" in lines[2]
    assert md.endswith("\n")


def test_csv_round_trips():
    text = _sample_table().to_csv()
    assert text.endswith("\n")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["method", *COLUMNS]
    assert rows[1][0] == "alpha"
    assert rows[1][COLUMNS.index("MRPC Accuracy") + 1] == "70.172%"
    assert rows[2][COLUMNS.index("SICK-R Spearman") + 1] == "75.038%"
    assert rows[1][COLUMNS.index("SICK-E Accuracy") + 1] == "N/A"


def test_empty_table_renders():
    t = ReportTable()
    assert t.to_markdown().count("\n") == 2  # header + separator
    assert t.to_csv().count("\n") == 1


def test_chart_written(tmp_path):
    out = tmp_path / "chart.png"
    render_report_chart(_sample_table(), out)
    data = out.read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    assert len(data) > 1000


def test_chart_empty_table(tmp_path):
    out = tmp_path / "empty.png"
    render_report_chart(ReportTable(), out)
    assert out.exists()
