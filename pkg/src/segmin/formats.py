"""Text formats for matrices and segmentations.

Matrix files::

    # optional comment lines
    2 3
    1 0 1
    2 0 2

Segmentation files are JSON::

    {"m": 2, "n": 3,
     "segments": [{"value": 1, "rows": [{"row": 1, "l": 1, "r": 1}, ...]}, ...]}
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .core import MAX_CELL_VALUE, IntensityMatrix, SegmentMatrix, Segmentation, as_matrix


class FormatError(ValueError):
    """Input text could not be parsed."""


def parse_matrix(text: str) -> IntensityMatrix:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError(f"header must be 'm n', got {lines[0]!r}")
    m, n = (_parse_int(tok, "header") for tok in header)
    if m < 1 or n < 1:
        raise FormatError(f"matrix dimensions must be positive, got {m}x{n}")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"expected {m} rows, found {len(body)}")
    rows = []
    for i, ln in enumerate(body, start=1):
        toks = ln.split()
        if len(toks) != n:
            raise FormatError(f"row {i} has {len(toks)} entries, expected {n}")
        row = [_parse_int(tok, f"row {i}") for tok in toks]
        for x in row:
            if x < 0:
                raise FormatError(f"row {i} contains negative entry {x}")
            if x > MAX_CELL_VALUE:
                raise FormatError(f"row {i} entry {x} exceeds 2**32")
        rows.append(row)
    return IntensityMatrix(rows)


def _parse_int(tok: str, where: str) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise FormatError(f"{where}: {tok!r} is not a decimal integer") from None


def format_matrix(T) -> str:
    T = as_matrix(T)
    lines = [f"{T.m} {T.n}"]
    lines += [" ".join(str(x) for x in row) for row in T.rows()]
    return "\n".join(lines) + "\n"


def segmentation_to_dict(S: Segmentation) -> dict:
    return {
        "m": S.m,
        "n": S.n,
        "segments": [
            {
                "value": seg.value,
                "rows": [{"row": row, "l": l, "r": r} for row, (l, r) in seg.intervals.items()],
            }
            for seg in S.segments
        ],
    }


def segmentation_from_dict(doc: dict) -> Segmentation:
    try:
        segs = []
        for entry in doc["segments"]:
            intervals = {}
            for item in entry["rows"]:
                row = int(item["row"])
                if row in intervals:
                    raise FormatError(f"row {row} listed twice in one segment")
                intervals[row] = (int(item["l"]), int(item["r"]))
            segs.append(SegmentMatrix(int(entry["value"]), intervals))
        return Segmentation(segs, int(doc["m"]), int(doc["n"]))
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed segmentation document: {exc}") from None


def format_segmentation(S: Segmentation) -> str:
    return json.dumps(segmentation_to_dict(S), indent=1) + "\n"


def parse_segmentation(text: str) -> Segmentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"segmentation is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("segmentation document must be a JSON object")
    return segmentation_from_dict(doc)


def read_text(path) -> str:
    if str(path) == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def write_text(path, text: str) -> None:
    if str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def load_matrix(path) -> IntensityMatrix:
    return parse_matrix(read_text(path))


def save_matrix(path, T) -> None:
    write_text(path, format_matrix(T))


def load_segmentation(path) -> Segmentation:
    return parse_segmentation(read_text(path))


def save_segmentation(path, S: Segmentation) -> None:
    write_text(path, format_segmentation(S))
