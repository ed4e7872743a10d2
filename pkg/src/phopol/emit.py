"""CSV and JSON emission of sweep tables, summaries and invariant reports.

Numbers are written with 17 significant digits, rows end in LF, and no
wall-clock data is included, so identical inputs give identical bytes.
"""

from __future__ import annotations

import io
import json
import math
from typing import Optional

import numpy as np

from .analysis import (
    Extremum,
    InsufficientPeaksError,
    InvariantReport,
    SweepTable,
    find_extrema,
    measure_splitting,
)

SPECTRUM_COLUMNS = {
    "linear": ("R", "T", "A", "phi_r", "phi_t", "re_lambda", "im_lambda", "flag"),
    "ring": ("T", "A", "phi_t", "re_lambda", "im_lambda", "flag"),
}
FRACTION_COLUMNS = ("omega_plus", "omega_minus", "x2_plus", "y2_plus", "x2_minus", "y2_minus")


def fmt(x) -> str:
    return format(float(x), ".17g")


def csv_header(table: SweepTable) -> tuple:
    cols = FRACTION_COLUMNS if table.kind == "fractions" else SPECTRUM_COLUMNS[table.geometry]
    return (table.axis_name, *cols)


def _cell_values(table: SweepTable, name: str) -> list:
    if name == "re_lambda":
        return [fmt(v) for v in np.real(table.columns["Lambda"])]
    if name == "im_lambda":
        return [fmt(v) for v in np.imag(table.columns["Lambda"])]
    if name == "flag":
        return ["degenerate" if v else "ok" for v in table.columns["flag"]]
    return [fmt(v) for v in table.column(name)]


def format_csv(table: SweepTable) -> str:
    header = csv_header(table)
    cells = [_cell_values(table, name) for name in header]
    buf = io.StringIO(newline="")
    buf.write(",".join(header) + "\n")
    for row in zip(*cells):
        buf.write(",".join(row) + "\n")
    return buf.getvalue()


def _write(text: str, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def emit_csv(table: SweepTable, path) -> None:
    _write(format_csv(table), path)


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def dumps(obj) -> str:
    return json.dumps(_jsonable(obj), indent=2, sort_keys=True) + "\n"


def table_document(table: SweepTable) -> dict:
    columns = {name: table.column(name) for name in csv_header(table) if name not in ("re_lambda", "im_lambda", "flag")}
    if table.kind == "spectrum":
        columns["re_lambda"] = np.real(table.columns["Lambda"])
        columns["im_lambda"] = np.imag(table.columns["Lambda"])
        columns["flag"] = np.asarray(table.columns["flag"], dtype=bool)
    return {
        "kind": table.kind,
        "geometry": table.geometry,
        "axis": table.axis_name,
        "columns": columns,
        "metadata": table.metadata,
    }


def emit_json(table: SweepTable, path) -> None:
    _write(dumps(table_document(table)), path)


def report_document(report: InvariantReport) -> dict:
    return {
        "ok": report.ok,
        "residuals": report.residuals,
        "tolerances": report.tolerances,
        "violations": report.violations,
    }


def _dips_as_peaks(extrema):
    # ring transmission shows the polariton lines as dips
    flip = {"max": "min", "min": "max"}
    return [Extremum(e.position, -e.height, flip[e.kind], e.index) for e in extrema]


def summarize(table: SweepTable, report: InvariantReport, prominence: float = 0.01,
              column: Optional[str] = None) -> dict:
    """Regime, extrema, measured splitting and worst-case residuals of a sweep."""
    summary = {
        "kind": table.kind,
        "geometry": table.geometry,
        "axis": table.axis_name,
        "points": len(table),
        "regime": table.metadata.get("regime"),
        "f_abs": table.metadata.get("f_abs"),
        "kernel": table.metadata.get("kernel_used", table.metadata.get("kernel")),
        "invariants": report_document(report),
    }
    if table.kind == "fractions":
        sep = table.columns["omega_plus"] - table.columns["omega_minus"]
        i = int(np.argmin(sep))
        summary["min_separation"] = float(sep[i])
        summary["min_separation_at"] = float(table.axis[i])
        return summary
    column = column or "T"
    extrema = find_extrema(table, column, prominence)
    summary["extrema_column"] = column
    summary["extrema"] = [
        {"position": e.position, "height": e.height, "kind": e.kind} for e in extrema
    ]
    summary["flagged_points"] = int(np.count_nonzero(table.columns["flag"]))
    if table.axis_name == "detuning":
        peaks = extrema if table.geometry == "linear" else _dips_as_peaks(extrema)
        try:
            summary["splitting"] = measure_splitting(peaks)
            summary["splitting_note"] = None
        except InsufficientPeaksError as exc:
            summary["splitting"] = None
            summary["splitting_note"] = str(exc)
    return summary
