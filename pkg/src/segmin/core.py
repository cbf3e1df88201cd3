"""Data model for intensity matrices and their segmentations.

Rows and columns are 1-based everywhere a segment refers to a position, so a
``RowSegment(l=2, r=3, value=1)`` covers the second and third cells of a row.
The numeric payload of an :class:`IntensityMatrix` is a plain 0-based numpy
array.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

MAX_CELL_VALUE = 2**32


class DimensionMismatch(ValueError):
    """A segmentation was checked against a matrix of a different shape."""


class IntensityMatrix:
    """Immutable m x n grid of non-negative integers."""

    __slots__ = ("_cells",)

    def __init__(self, cells):
        if isinstance(cells, IntensityMatrix):
            self._cells = cells._cells
            return
        arr = np.asarray(cells)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"intensity matrix must be a non-empty 2-d grid, got shape {arr.shape}")
        if arr.dtype.kind == "O":
            if not all(isinstance(x, (int, np.integer)) and not isinstance(x, bool) for x in arr.flat):
                raise ValueError("intensity matrix entries must be integers")
        elif arr.dtype.kind not in "iu":
            raise ValueError(f"intensity matrix entries must be integers, got dtype {arr.dtype}")
        if (arr < 0).any():
            raise ValueError("intensity matrix entries must be non-negative")
        if (arr > MAX_CELL_VALUE).any():
            raise ValueError("intensity matrix entries must not exceed 2**32")
        arr = arr.astype(np.int64)
        arr.setflags(write=False)
        self._cells = arr

    @property
    def cells(self) -> np.ndarray:
        return self._cells

    @property
    def m(self) -> int:
        return self._cells.shape[0]

    @property
    def n(self) -> int:
        return self._cells.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    @property
    def h(self) -> int:
        """Largest entry."""
        return int(self._cells.max())

    @property
    def D(self) -> int:
        """Maximum row-difference over all rows."""
        return max(row_difference(row) for row in self._cells)

    def row(self, i: int) -> tuple[int, ...]:
        """Row ``i`` (1-based) as a tuple of ints."""
        return tuple(int(x) for x in self._cells[i - 1])

    def rows(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in r) for r in self._cells]

    def tolist(self) -> list[list[int]]:
        return self._cells.tolist()

    def __eq__(self, other):
        if not isinstance(other, IntensityMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._cells, other._cells))

    def __hash__(self):
        return hash((self.shape, self._cells.tobytes()))

    def __repr__(self):
        return f"IntensityMatrix({self.tolist()!r})"


def as_matrix(T) -> IntensityMatrix:
    return T if isinstance(T, IntensityMatrix) else IntensityMatrix(T)


class RowSegment(NamedTuple):
    """Columns ``l..r`` (inclusive, 1-based) of one row raised by ``value``."""

    l: int
    r: int
    value: int


@dataclass
class RowSegmentation:
    segments: list[RowSegment] = field(default_factory=list)

    def __post_init__(self):
        self.segments = [RowSegment(*s) for s in self.segments]
        for s in self.segments:
            if s.value < 1 or s.l < 1 or s.r < s.l:
                raise ValueError(f"invalid row segment {s}")

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    @property
    def counts_by_value(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for s in self.segments:
            counts[s.value] = counts.get(s.value, 0) + 1
        return dict(sorted(counts.items()))

    def count(self, value: int) -> int:
        return sum(1 for s in self.segments if s.value == value)

    def total(self, n: int) -> np.ndarray:
        """Sum of the segments as a length-``n`` vector."""
        out = np.zeros(n, dtype=np.int64)
        for s in self.segments:
            if s.r > n:
                raise ValueError(f"segment {s} exceeds row length {n}")
            out[s.l - 1 : s.r] += s.value
        return out

    def sums_to(self, row: Sequence[int]) -> bool:
        row = np.asarray(row, dtype=np.int64)
        try:
            return bool(np.array_equal(self.total(len(row)), row))
        except ValueError:
            return False

    def multiset(self) -> list[RowSegment]:
        return sorted(self.segments)


@dataclass(frozen=True)
class SegmentMatrix:
    """One leaf configuration: a value and at most one open interval per row.

    ``intervals`` maps a 1-based row index to its ``(l, r)`` column span.
    """

    value: int
    intervals: Mapping[int, tuple[int, int]]

    def __post_init__(self):
        if int(self.value) < 1:
            raise ValueError("segment value must be positive")
        if not self.intervals:
            raise ValueError("a segment matrix must cover at least one row")
        clean = {}
        for row, (l, r) in sorted(self.intervals.items()):
            if row < 1 or l < 1 or r < l:
                raise ValueError(f"invalid interval ({l}, {r}) in row {row}")
            clean[int(row)] = (int(l), int(r))
        object.__setattr__(self, "value", int(self.value))
        object.__setattr__(self, "intervals", clean)

    def __hash__(self):
        return hash((self.value, tuple(self.intervals.items())))

    def row_segments(self) -> Iterable[tuple[int, RowSegment]]:
        for row, (l, r) in self.intervals.items():
            yield row, RowSegment(l, r, self.value)

    def to_array(self, m: int, n: int) -> np.ndarray:
        out = np.zeros((m, n), dtype=np.int64)
        for row, (l, r) in self.intervals.items():
            out[row - 1, l - 1 : r] = self.value
        return out


@dataclass
class Segmentation:
    segments: list[SegmentMatrix]
    m: int
    n: int

    def __post_init__(self):
        self.segments = list(self.segments)
        for seg in self.segments:
            for row, (_, r) in seg.intervals.items():
                if row > self.m or r > self.n:
                    raise ValueError(
                        f"segment interval in row {row} ending at column {r} "
                        f"lies outside a {self.m}x{self.n} target"
                    )

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    @property
    def size(self) -> int:
        return len(self.segments)

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.m, self.n), dtype=np.int64)
        for seg in self.segments:
            for row, (l, r) in seg.intervals.items():
                out[row - 1, l - 1 : r] += seg.value
        return out

    def row_projection(self, row: int) -> RowSegmentation:
        return RowSegmentation(
            [RowSegment(*seg.intervals[row], seg.value) for seg in self.segments if row in seg.intervals]
        )

    def values(self) -> list[int]:
        return [s.value for s in self.segments]


@dataclass(frozen=True)
class Verdict:
    """Outcome of :func:`verify`. Truthy iff the segmentation is exact."""

    ok: bool
    cell: tuple[int, int] | None = None
    residual: int | None = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "OK"
        return f"mismatch at {self.cell}, residual {self.residual}"


def markers(row: Sequence[int]) -> int:
    """Number of positions where the row changes value, counting both ends against 0."""
    count = 0
    prev = 0
    for x in row:
        if x != prev:
            count += 1
        prev = x
    if prev != 0:
        count += 1
    return count


def rho(T) -> int:
    T = as_matrix(T)
    return max(markers(r) for r in T.rows())


def lower_bound(T) -> int:
    """``ceil(rho / 2)``; no segmentation of ``T`` can be smaller."""
    return (rho(T) + 1) // 2


def row_difference(row: Sequence[int]) -> int:
    """Largest jump between neighbours, including the jumps from and to 0 at the ends."""
    vals = [int(x) for x in row]
    if not vals:
        return 0
    best = max(vals[0], vals[-1])
    for a, b in zip(vals, vals[1:]):
        best = max(best, abs(a - b))
    return best


def positive_variation(row: Sequence[int]) -> int:
    """Sum of the upward jumps along the row, starting from 0."""
    total = 0
    prev = 0
    for x in row:
        if x > prev:
            total += x - prev
        prev = x
    return total


def verify(T, S: Segmentation) -> Verdict:
    T = as_matrix(T)
    if S.shape != T.shape:
        raise DimensionMismatch(f"segmentation is {S.m}x{S.n}, matrix is {T.m}x{T.n}")
    diff = T.cells - S.to_array()
    bad = np.argwhere(diff != 0)
    if len(bad) == 0:
        return Verdict(True)
    i, j = (int(x) for x in bad[0])
    return Verdict(False, (i + 1, j + 1), int(diff[i, j]))
