"""Greedy stacking of row segmentations into segment matrices."""

from __future__ import annotations

from typing import Sequence

from .core import RowSegmentation, SegmentMatrix, Segmentation


def pack_rows(rows: Sequence[RowSegmentation], n: int) -> Segmentation:
    """Combine per-row segmentations of an ``len(rows) x n`` matrix.

    For each value ``v`` the k-th emitted v-matrix takes the k-th v-segment of
    every row that has one, so the output holds ``sum_v max_i n_v(i)``
    matrices. Rows are 1-based in the result.
    """
    by_value: dict[int, list[list[tuple[int, int]]]] = {}
    for i, rs in enumerate(rows):
        for s in rs:
            if s.r > n:
                raise ValueError(f"row {i + 1} segment {s} exceeds {n} columns")
            by_value.setdefault(s.value, [[] for _ in rows])[i].append((s.l, s.r))
    out = []
    for v in sorted(by_value):
        per_row = by_value[v]
        for k in range(max(len(x) for x in per_row)):
            out.append(SegmentMatrix(v, {i + 1: x[k] for i, x in enumerate(per_row) if k < len(x)}))
    return Segmentation(out, len(rows), n)
