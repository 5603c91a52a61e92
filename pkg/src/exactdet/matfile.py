"""Matrix file formats: whitespace text and a structurally equivalent JSON form.

Text format: a header line ``rows cols`` (positive integers) followed by
``rows`` lines of ``cols`` whitespace-separated scalar tokens (``p`` or
``p/q``).  UTF-8, newline-terminated lines.

JSON format: ``{"rows": n, "cols": m, "entries": [[...], ...]}`` with each
entry a scalar string (integers are also accepted on input).  Input format
is sniffed from the first non-blank character, so both forms are accepted
everywhere a matrix file is read.
"""

from __future__ import annotations

import json

from .core import Matrix, format_scalar, parse_scalar, scalar


def parse_matrix_text(text: str) -> Matrix:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"header must be 'rows cols', got {lines[0]!r}")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"header must be 'rows cols', got {lines[0]!r}") from None
    if rows < 1 or cols < 1:
        raise ValueError(f"header dimensions must be positive, got {rows} {cols}")
    if len(lines) - 1 != rows:
        raise ValueError(f"expected {rows} matrix rows, found {len(lines) - 1}")
    entries = []
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != cols:
            raise ValueError(f"expected {cols} entries per row, got {len(tokens)}: {line!r}")
        entries.append(tuple(parse_scalar(tok) for tok in tokens))
    return Matrix(rows, cols, tuple(entries))


def parse_matrix_json(text: str) -> Matrix:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON matrix: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError("JSON matrix must be an object")
    missing = {"rows", "cols", "entries"} - data.keys()
    if missing:
        raise ValueError(f"JSON matrix missing keys: {sorted(missing)}")
    rows, cols, body = data["rows"], data["cols"], data["entries"]
    if (
        not isinstance(rows, int)
        or not isinstance(cols, int)
        or isinstance(rows, bool)
        or isinstance(cols, bool)
        or rows < 1
        or cols < 1
    ):
        raise ValueError("JSON matrix dimensions must be positive integers")
    if not isinstance(body, list) or len(body) != rows:
        raise ValueError(f"JSON matrix needs {rows} entry rows")
    entries = []
    for row in body:
        if not isinstance(row, list) or len(row) != cols:
            raise ValueError(f"JSON matrix rows need {cols} entries")
        entries.append(tuple(scalar(v) for v in row))
    return Matrix(rows, cols, tuple(entries))


def parse_matrix(text: str) -> Matrix:
    """Parse either format, sniffing JSON from a leading '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_matrix_json(text)
    return parse_matrix_text(text)


def emit_matrix_text(matrix: Matrix) -> str:
    if matrix.rows < 1 or matrix.cols < 1:
        raise ValueError("matrix files require positive dimensions")
    lines = [f"{matrix.rows} {matrix.cols}"]
    for row in matrix.entries:
        lines.append(" ".join(format_scalar(v) for v in row))
    return "\n".join(lines) + "\n"


def emit_matrix_json(matrix: Matrix) -> str:
    if matrix.rows < 1 or matrix.cols < 1:
        raise ValueError("matrix files require positive dimensions")
    payload = {
        "rows": matrix.rows,
        "cols": matrix.cols,
        "entries": [[format_scalar(v) for v in row] for row in matrix.entries],
    }
    return json.dumps(payload, indent=2) + "\n"
