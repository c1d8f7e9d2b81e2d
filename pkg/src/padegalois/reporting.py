"""Deterministic serialization of reproduction reports.

Three formats: ``text`` (aligned, human-oriented), ``json`` (canonical
key order, two-space indent, trailing newline), and ``csv`` (one row per
order; for each column of the table a group column followed by its
certainty column).  Reports carry no timestamps, so identical inputs
always serialize to identical bytes.
"""

from __future__ import annotations

import csv
import io
import json

FORMATS = ("text", "json", "csv")


def emit(report: dict, format: str = "text") -> bytes:
    """Serialize a reproduce() report. Unknown formats raise ValueError."""
    if format == "json":
        return (json.dumps(report, sort_keys=True, indent=2) + "\n").encode(
            "utf-8"
        )
    if format == "csv":
        return _emit_csv(report)
    if format == "text":
        return _emit_text(report)
    raise ValueError(
        f"unknown format: {format!r} (choose from {', '.join(FORMATS)})"
    )


def _emit_csv(report: dict) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["n"]
    for column in report["columns"]:
        header.extend([column, "certainty"])
    writer.writerow(header)
    for row in report["rows"]:
        out = [str(row["order"])]
        for cell in row["cells"]:
            out.extend([cell["observed"], cell["certainty"]])
        writer.writerow(out)
    return buf.getvalue().encode("utf-8")


def _cell_text(cell: dict) -> str:
    body = f"{cell['observed']} ({cell['certainty']})"
    if cell["status"] == "mismatch":
        return f"{body} MISMATCH, expected {cell['expected']}"
    if cell["status"] == "consistent":
        return f"{body} ~ {cell['expected']}"
    return f"{body} ok"


def _emit_text(report: dict) -> bytes:
    lines = [
        f"table {report['table']}: {report['title']}",
        f"source: {report['source']}; prime bound {report['prime_bound']}",
    ]
    headers = ["n"] + list(report["columns"])
    grid = [headers]
    for row in report["rows"]:
        grid.append(
            [str(row["order"])] + [_cell_text(c) for c in row["cells"]]
        )
    widths = [
        max(len(line[i]) for line in grid) for i in range(len(headers))
    ]
    lines.append("")
    for line in grid:
        lines.append(
            "  ".join(part.ljust(w) for part, w in zip(line, widths)).rstrip()
        )
    lines.append("")
    s = report["summary"]
    lines.append(
        f"cells: {s['cells']}  proven: {s['proven']}  "
        f"consistent: {s['consistent']}  mismatches: {s['mismatches']}"
    )
    lines.append(f"result: {s['status'].upper()}")
    return ("\n".join(lines) + "\n").encode("utf-8")
