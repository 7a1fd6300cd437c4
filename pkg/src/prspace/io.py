"""Prediction files and report serialization.

A prediction file is UTF-8, comma-delimited text with a header naming some of
``label``, ``score``, ``fold`` and ``task`` (``label`` and ``score`` are
required, nothing else is allowed). Labels are ``0`` or ``1``; scores must be
finite decimals. Empty ``fold``/``task`` cells mean "no group".
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
import os
from pathlib import Path

from .aggregate import MetricsReport
from .core import ScoredDataset
from .errors import ParseError, WriteError

__all__ = [
    "COLUMNS",
    "read_predictions",
    "parse_predictions",
    "write_predictions",
    "format_number",
    "report_to_json",
    "report_from_json",
    "reports_to_csv",
    "write_text",
]

COLUMNS = ("label", "score", "fold", "task")
REQUIRED = ("label", "score")
SIGNIFICANT_DIGITS = 6


def parse_predictions(text: str, source=None) -> ScoredDataset:
    """Parse prediction-file text. ``source`` only labels error messages."""
    reader = csv.reader(_io.StringIO(text))
    header = None
    labels, scores, folds, tasks = [], [], [], []
    for row in reader:
        line = reader.line_num
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if header is None:
            header = [h.strip() for h in row]
            extra = [h for h in header if h not in COLUMNS]
            if extra:
                raise ParseError(f"unexpected column(s) {extra}; allowed: {list(COLUMNS)}", line, source)
            if len(set(header)) != len(header):
                raise ParseError("duplicate column names in header", line, source)
            missing = [h for h in REQUIRED if h not in header]
            if missing:
                raise ParseError(f"missing required column(s) {missing}", line, source)
            col = {name: i for i, name in enumerate(header)}
            continue
        if len(row) != len(header):
            raise ParseError(f"expected {len(header)} fields, found {len(row)}", line, source)
        label = row[col["label"]].strip()
        if label not in ("0", "1"):
            raise ParseError(f"label must be 0 or 1, got {label!r}", line, source)
        raw = row[col["score"]].strip()
        try:
            score = float(raw)
        except ValueError:
            raise ParseError(f"score is not a number: {raw!r}", line, source) from None
        if not math.isfinite(score):
            raise ParseError(f"score must be finite, got {raw!r}", line, source)
        labels.append(int(label))
        scores.append(score)
        if "fold" in col:
            folds.append(row[col["fold"]].strip() or None)
        if "task" in col:
            tasks.append(row[col["task"]].strip() or None)
    if header is None:
        raise ParseError("missing header row", 1, source)
    return ScoredDataset(
        labels,
        scores,
        folds if "fold" in col else None,
        tasks if "task" in col else None,
    )


def read_predictions(path) -> ScoredDataset:
    try:
        text = Path(path).read_text(encoding="utf-8-sig")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read prediction file: {exc}", None, path) from exc
    return parse_predictions(text, source=path)


def write_predictions(data: ScoredDataset, path) -> None:
    """Write ``data`` in prediction-file format (scores in full precision)."""
    cols = ["label", "score"]
    if data.folds is not None:
        cols.append("fold")
    if data.tasks is not None:
        cols.append("task")
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for label, score, fold, task in data.records():
        row = [label, repr(score)]
        if data.folds is not None:
            row.append("" if fold is None else fold)
        if data.tasks is not None:
            row.append("" if task is None else task)
        w.writerow(row)
    write_text(path, buf.getvalue())


def format_number(value, full_precision: bool = False):
    """Round floats to six significant digits unless ``full_precision``."""
    if isinstance(value, float) and not full_precision and math.isfinite(value):
        return float(f"{value:.{SIGNIFICANT_DIGITS}g}")
    return value


def _round_tree(obj, full_precision: bool):
    if isinstance(obj, dict):
        return {k: _round_tree(v, full_precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_tree(v, full_precision) for v in obj]
    return format_number(obj, full_precision)


def dumps(obj, full_precision: bool = False) -> str:
    return json.dumps(_round_tree(obj, full_precision), indent=2) + "\n"


def report_to_json(report: MetricsReport, full_precision: bool = False) -> str:
    return dumps(report.to_dict(), full_precision)


def report_from_json(text: str) -> MetricsReport:
    return MetricsReport.from_dict(json.loads(text))


def _csv_cell(value, full_precision: bool) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value) if full_precision else f"{value:.{SIGNIFICANT_DIGITS}g}"
    if isinstance(value, (list, tuple)):
        return ":".join(_csv_cell(v, full_precision) for v in value)
    return str(value)


def rows_to_csv(header, rows, full_precision: bool = False) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_csv_cell(row.get(h), full_precision) for h in header])
    return buf.getvalue()


def reports_to_csv(reports, full_precision: bool = False) -> str:
    dicts = [r.to_dict() for r in reports]
    header = list(dicts[0]) if dicts else list(MetricsReport.__dataclass_fields__)
    return rows_to_csv(header, dicts, full_precision)


def write_text(path, text: str) -> None:
    """Write ``text`` to ``path`` atomically; errors become :class:`WriteError`."""
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    try:
        tmp.write_text(text, encoding="utf-8", newline="")
        os.replace(tmp, path)
    except OSError as exc:
        raise WriteError(f"cannot write {path}: {exc}") from exc
