"""Single-row segmentation algorithms.

All solvers take a row as a sequence of non-negative ints and return a
:class:`~segmin.core.RowSegmentation` whose segments use 1-based columns.
Internally rows are padded with a 0 on both sides, so padded index ``p`` is
column ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, NamedTuple, Sequence

from .core import RowSegment, RowSegmentation, markers, row_difference
from .islands import BASE4_ADDITIVE_CONSTANT, island_catalog


class LimitExceeded(ValueError):
    """An exact solver was asked to handle an instance above its size caps."""


def _check_alphabet(row: Sequence[int], top: int) -> list[int]:
    vals = [int(x) for x in row]
    for j, x in enumerate(vals, start=1):
        if not 0 <= x <= top:
            raise ValueError(f"column {j} holds {x}, expected a value in 0..{top}")
    return vals


class _Run(NamedTuple):
    value: int
    start: int
    end: int


def _runs(padded: Sequence[int]) -> list[_Run]:
    out = []
    start = 0
    for p in range(1, len(padded) + 1):
        if p == len(padded) or padded[p] != padded[start]:
            out.append(_Run(padded[start], start, p - 1))
            start = p
    return out


def _groups(runs: list[_Run]) -> list[list[_Run]]:
    """Maximal stretches of non-zero runs."""
    groups, cur = [], []
    for run in runs:
        if run.value == 0:
            if cur:
                groups.append(cur)
            cur = []
        else:
            cur.append(run)
    return groups


# -- values in {0, 1, 2} ------------------------------------------------------


class Base3Step(NamedTuple):
    case: str
    segments: tuple[RowSegment, ...]
    residual: tuple[int, ...]


def _shape(group: list[_Run]) -> tuple[int, ...]:
    return tuple(r.value for r in group)


def _two_run(group: list[_Run]) -> _Run:
    return next(r for r in group if r.value == 2)


def _span(group: list[_Run]) -> tuple[int, int]:
    return group[0].start, group[-1].end


def _next_base3_step(padded: list[int]) -> tuple[str, list[RowSegment]]:
    runs = _runs(padded)
    for k in range(1, len(runs) - 1):
        if (runs[k - 1].value, runs[k].value, runs[k + 1].value) == (1, 2, 1):
            return "1", [RowSegment(runs[k].start, runs[k].end, 1)]
    for k in range(1, len(runs) - 1):
        if (runs[k - 1].value, runs[k].value, runs[k + 1].value) == (0, 1, 0):
            return "2", [RowSegment(runs[k].start, runs[k].end, 1)]

    groups = _groups(runs)
    mixed = [g for g in groups if _shape(g) in ((1, 2), (2, 1))]
    plain = [g for g in groups if _shape(g) == (2,)]
    triple = [g for g in groups if _shape(g) == (2, 1, 2)]
    assert len(mixed) + len(plain) + len(triple) == len(groups), groups

    if triple:
        first2, ones, last2 = triple[0]
        return "3", [
            RowSegment(first2.start, first2.end, 2),
            RowSegment(ones.start, last2.end, 1),
            RowSegment(last2.start, last2.end, 1),
        ]
    if len(mixed) >= 2:
        a, b = mixed[0], mixed[1]
        ta, tb = _two_run(a), _two_run(b)
        ob = next(r for r in b if r.value == 1)
        return "4", [
            RowSegment(ta.start, ta.end, 1),
            RowSegment(*_span(a), 1),
            RowSegment(tb.start, tb.end, 2),
            RowSegment(ob.start, ob.end, 1),
        ]
    if len(plain) >= 2:
        a, b = plain[0], plain[1]
        return "5", [
            RowSegment(*_span(a), 2),
            RowSegment(*_span(b), 1),
            RowSegment(*_span(b), 1),
        ]
    if mixed and plain:
        a, b = mixed[0], plain[0]
        ta = _two_run(a)
        return "6", [
            RowSegment(*_span(b), 2),
            RowSegment(*_span(a), 1),
            RowSegment(ta.start, ta.end, 1),
        ]
    # base case: a single 01+2+0, 02+1+0 or 02+0 stretch
    (g,) = groups
    return "base", [RowSegment(r.start, r.end, r.value) for r in g]


def base3_steps(row: Sequence[int]) -> Iterator[Base3Step]:
    """Replay the case-by-case rewrite used by :func:`segment_row_base3`.

    Each step reports which case fired, the segments it added and the row
    that is left to segment afterwards.
    """
    vals = _check_alphabet(row, 2)
    padded = [0] + vals + [0]
    while any(padded):
        case, segs = _next_base3_step(padded)
        for s in segs:
            for p in range(s.l, s.r + 1):
                padded[p] -= s.value
        assert min(padded) >= 0
        yield Base3Step(case, tuple(segs), tuple(padded[1:-1]))


def segment_row_base3(row: Sequence[int]) -> RowSegmentation:
    """Segment a 0/1/2 row with at most rho/2 1-segments and rho/4 + 1/2 2-segments."""
    segs: list[RowSegment] = []
    for step in base3_steps(row):
        segs.extend(step.segments)
    return RowSegmentation(segs)


# -- values in {0, 1, 2, 3} ---------------------------------------------------


class Island(NamedTuple):
    pattern: str
    spans: tuple[tuple[int, int], ...]  # column span of each inner run


def find_islands(row: Sequence[int]) -> list[Island]:
    """Peel minimal islands off the row until nothing is left.

    The island ending earliest (and, among those, starting latest) is always
    minimal. Flattening it removes exactly ``len(pattern) - 1`` markers.
    """
    vals = _check_alphabet(row, 3)
    runs = _runs([0] + vals + [0])
    found = []
    while len(runs) > 1:
        for j in range(2, len(runs)):
            sigma = runs[j].value
            i = j - 1
            while i >= 0 and runs[i].value > sigma:
                i -= 1
            if i >= 0 and i < j - 1 and runs[i].value == sigma:
                break
        else:  # pragma: no cover - every non-zero padded row has an island
            raise AssertionError(f"no island in {runs}")
        inner = runs[i + 1 : j]
        pattern = "0" + "".join(str(r.value - sigma) for r in inner) + "0"
        found.append(Island(pattern, tuple((r.start, r.end) for r in inner)))
        merged = _Run(sigma, runs[i].start, runs[j].end)
        runs = runs[:i] + [merged] + runs[j + 1 :]
    return found


def _place(island: Island, pieces) -> list[RowSegment]:
    return [RowSegment(island.spans[a][0], island.spans[b][1], v) for a, b, v in pieces]


def segment_row_base4(row: Sequence[int]) -> RowSegmentation:
    """Segment a 0/1/2/3 row island by island.

    Full batches of a pattern use at most rho/(2v) v-segments; the copies
    left over use at most :data:`BASE4_ADDITIVE_CONSTANT` extra segments of
    each value in total.
    """
    catalog = island_catalog()
    by_pattern: dict[str, list[Island]] = {}
    for isl in find_islands(row):
        by_pattern.setdefault(isl.pattern, []).append(isl)
    segs: list[RowSegment] = []
    for pattern, copies in by_pattern.items():
        plan = catalog[pattern]
        full = len(copies) - len(copies) % plan.copies
        for k, isl in enumerate(copies):
            pieces = plan.batch[k % plan.copies] if k < full else plan.leftover
            segs.extend(_place(isl, pieces))
    return RowSegmentation(segs)


# -- arbitrary values ---------------------------------------------------------


def sweep_single_row(row: Sequence[int]) -> RowSegmentation:
    """Stack sweep: open a segment on every rise, close segments on every drop.

    A drop that ends only part of the topmost open segment emits the closing
    part as its own segment and leaves the remainder open with the same start.
    Emits at most ``markers(row)`` segments, each of value at most the row's
    row-difference.
    """
    vals = [int(x) for x in row]
    stack: list[list[int]] = []  # [start, value]
    out: list[RowSegment] = []
    prev = 0
    for col, cur in enumerate(vals + [0], start=1):
        if cur > prev:
            stack.append([col, cur - prev])
        elif cur < prev:
            drop = prev - cur
            while drop:
                start, v = stack[-1]
                if v <= drop:
                    stack.pop()
                    out.append(RowSegment(start, col - 1, v))
                    drop -= v
                else:
                    stack[-1][1] = v - drop
                    out.append(RowSegment(start, col - 1, drop))
                    drop = 0
        prev = cur
    return RowSegmentation(out)


def transform_to_bounded(row: Sequence[int], S: RowSegmentation) -> RowSegmentation:
    """Rewrite ``S`` so that no two segments meet, without adding segments.

    Two segments meet when one ends at column i and the other starts at i + 1.
    A meeting pair is replaced by the smaller value over the union plus the
    difference over the larger segment's own span. Once no pair meets, every
    value is at most the row-difference of ``row``.
    """
    if not S.sums_to(row):
        raise ValueError("segmentation does not sum to the row")
    segs = list(S.segments)
    while True:
        ends = {s.r for s in segs}
        meets = sorted(i for i in ends if any(t.l == i + 1 for t in segs))
        if not meets:
            break
        i = meets[0]
        left = min((s for s in segs if s.r == i), key=lambda s: (s.l, s.value))
        right = min((s for s in segs if s.l == i + 1), key=lambda s: (-s.r, s.value))
        segs.remove(left)
        segs.remove(right)
        low = min(left.value, right.value)
        segs.append(RowSegment(left.l, right.r, low))
        if left.value > right.value:
            segs.append(RowSegment(left.l, left.r, left.value - low))
        elif right.value > left.value:
            segs.append(RowSegment(right.l, right.r, right.value - low))
    return RowSegmentation(sorted(segs, key=lambda s: (s.l, -s.r, s.value)))


EXACT_ROW_MAX_LEN = 12
EXACT_ROW_MAX_H = 6


def exact_single_row(
    row: Sequence[int],
    value_cap: int | None = None,
    *,
    max_len: int = EXACT_ROW_MAX_LEN,
    max_h: int = EXACT_ROW_MAX_H,
    override: bool = False,
) -> RowSegmentation:
    """Minimum-size segmentation of one row by iterative deepening.

    Exponential in the worst case, hence the caps; pass ``override=True`` to
    lift them. With ``value_cap`` every segment value stays at or below it.
    """
    vals = [int(x) for x in row]
    if any(x < 0 for x in vals):
        raise ValueError("row entries must be non-negative")
    h = max(vals, default=0)
    if not override and (len(vals) > max_len or h > max_h):
        raise LimitExceeded(
            f"row of length {len(vals)} with max {h} exceeds caps "
            f"(length {max_len}, max {max_h})"
        )
    if value_cap is not None and value_cap < 1:
        raise ValueError("value_cap must be positive")
    cap = h if value_cap is None else min(value_cap, h)
    failed: set[tuple[tuple[int, ...], int]] = set()

    def search(res: tuple[int, ...], budget: int):
        if not any(res):
            return []
        if 2 * budget < markers(res) or (res, budget) in failed:
            return None
        p = next(k for k, x in enumerate(res) if x)
        for v in range(min(res[p], cap), 0, -1):
            e = p
            nxt = list(res)
            while e < len(res) and res[e] >= v:
                nxt[e] -= v
                sub = search(tuple(nxt), budget - 1)
                if sub is not None:
                    return [RowSegment(p + 1, e + 1, v)] + sub
                e += 1
        failed.add((res, budget))
        return None

    start = tuple(vals)
    budget = (markers(start) + 1) // 2
    while True:
        found = search(start, budget)
        if found is not None:
            return RowSegmentation(found)
        budget += 1


# -- solver interface ---------------------------------------------------------


@dataclass(frozen=True)
class SingleRowSolver:
    """A row segmentation routine with a claimed approximation factor.

    ``max_value_bound`` names the quantity that caps every emitted value:
    ``"D"`` for the row-difference, ``"h"`` for the row maximum.
    """

    name: str
    alpha: Fraction
    solve: Callable[[Sequence[int]], RowSegmentation]
    max_value_bound: str = "h"

    def __call__(self, row: Sequence[int]) -> RowSegmentation:
        return self.solve(row)


SWEEP = SingleRowSolver("sweep", Fraction(2), sweep_single_row, "D")
EXACT = SingleRowSolver("exact", Fraction(1), exact_single_row, "h")

ROW_SOLVERS = {"sweep": SWEEP, "exact": EXACT}

__all__ = [
    "BASE4_ADDITIVE_CONSTANT",
    "EXACT",
    "LimitExceeded",
    "ROW_SOLVERS",
    "SWEEP",
    "SingleRowSolver",
    "base3_steps",
    "exact_single_row",
    "find_islands",
    "row_difference",
    "segment_row_base3",
    "segment_row_base4",
    "sweep_single_row",
    "transform_to_bounded",
]
