"""Reading and writing distance matrices (JSON and CSV)."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .metric import DEFAULT_TOL, FiniteMetricSpace, ToleranceConfig, ValidationError, validate_metric

__all__ = ["load_space", "loads_json", "loads_csv", "dumps_json", "dumps_csv"]


def loads_json(text: str, tol: ToleranceConfig = DEFAULT_TOL) -> FiniteMetricSpace:
    """Parse ``{"labels": [...], "dist": [[...], ...]}``; labels optional."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "dist" not in doc:
        raise ValidationError('JSON document must be an object with a "dist" array')
    return validate_metric(doc["dist"], doc.get("labels"), tol)


def loads_csv(text: str, tol: ToleranceConfig = DEFAULT_TOL) -> FiniteMetricSpace:
    """Parse ``n`` rows of ``n`` numbers, optionally preceded by a label row."""
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise ValidationError("empty CSV input")
    labels = None
    try:
        [float(c) for c in rows[0]]
        has_header = len(rows) == len(rows[0]) + 1  # numeric labels such as "0,1,2"
    except ValueError:
        has_header = True
    if has_header:
        labels = [c.strip() for c in rows[0]]
        rows = rows[1:]
    try:
        matrix = [[float(c) for c in r] for r in rows]
    except ValueError as exc:
        raise ValidationError(f"non-numeric CSV entry: {exc}") from None
    return validate_metric(matrix, labels, tol)


def load_space(path, tol: ToleranceConfig = DEFAULT_TOL) -> FiniteMetricSpace:
    """Load a space from ``path``; ``.csv`` files are CSV, anything else JSON."""
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".csv":
        return loads_csv(text, tol)
    return loads_json(text, tol)


def dumps_json(X: FiniteMetricSpace) -> str:
    return json.dumps({"labels": list(X.labels), "dist": X.dist.tolist()})


def dumps_csv(X: FiniteMetricSpace) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(X.labels)
    w.writerows([repr(v) for v in row] for row in X.dist.tolist())
    return buf.getvalue()
