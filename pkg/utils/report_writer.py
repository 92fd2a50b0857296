"""
Report files for an ExperimentReport: CSV (pandas), sorted JSON, two-column plot data.

File names depend only on the command, so identical runs overwrite identical bytes.
"""

import json
import logging
import math
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Union

import numpy as np
import pandas as pd
from tabulate import tabulate

from libs.experiments.models import ExperimentReport
from libs.exceptions import ParameterError

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.12g"
PathLike = Union[str, Path]


def _plain(value: Any) -> Any:
    """numpy scalars, enums, paths and non-finite floats as JSON-safe values."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_plain(v) for v in value]
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def _stem(report: ExperimentReport) -> str:
    return report.command.replace("-", "_")


def write_csv(report: ExperimentReport, out_dir: PathLike) -> List[Path]:
    """Main rows to <command>.csv, extra tables to <command>_<name>.csv, summary as key,value."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = _stem(report)
    tables = {stem: report.rows}
    tables.update({f"{stem}_{name}": rows for name, rows in report.tables.items()})
    if report.summary:
        summary = _plain(report.summary)
        tables[f"{stem}_summary"] = [{"key": k, "value": summary[k]} for k in sorted(summary)]
    paths = []
    for name, rows in tables.items():
        path = out_dir / f"{name}.csv"
        frame = pd.DataFrame([_plain(row) for row in rows])
        frame.to_csv(path, index=False, sep=",", decimal=".", float_format=FLOAT_FORMAT,
                      lineterminator="\n")
        paths.append(path)
    return paths


def report_document(report: ExperimentReport) -> Dict[str, Any]:
    return _plain({
        "command": report.command,
        "passed": report.passed,
        "summary": report.summary,
        "rows": report.rows,
        "tables": report.tables,
    })


def write_json(report: ExperimentReport, out_dir: PathLike) -> List[Path]:
    """One sorted-key JSON document with indent 2."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"{_stem(report)}.json"
    text = json.dumps(report_document(report), sort_keys=True, indent=2, ensure_ascii=False)
    path.write_text(text + "\n", encoding="utf-8")
    return [path]


def write_plotdata(report: ExperimentReport, out_dir: PathLike) -> List[Path]:
    """Each plot series as whitespace-separated columns behind '#' comment lines."""
    if not report.plots:
        raise ParameterError(f"command '{report.command}' produces no plot series")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for series in report.plots:
        path = out_dir / f"{_stem(report)}_{series.name}.dat"
        lines = [f"# {series.header}", f"# {series.x_label} {series.y_label}"]
        lines += [f"{FLOAT_FORMAT % float(x)} {FLOAT_FORMAT % float(y)}" for x, y in zip(series.x, series.y)]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        paths.append(path)
    return paths


WRITERS = {"csv": write_csv, "json": write_json, "plotdata": write_plotdata}


def write_report(report: ExperimentReport, output: str, out_dir: PathLike) -> List[Path]:
    """Write the report in the requested format and return the file paths."""
    writer = WRITERS.get(output)
    if writer is None:
        raise ParameterError(f"unknown output format '{output}'")
    paths = writer(report, out_dir)
    logger.info(f"Wrote {len(paths)} {output} file(s) to {out_dir}")
    return paths


def format_table(rows: List[Dict[str, Any]], max_rows: int = 40) -> str:
    """Grid table of the first max_rows rows."""
    if not rows:
        return "(no rows)"
    shown = [_plain(row) for row in rows[:max_rows]]
    text = tabulate(shown, headers="keys", tablefmt="grid", floatfmt=".6g")
    if len(rows) > max_rows:
        text += f"\n... {len(rows) - max_rows} more rows"
    return text
