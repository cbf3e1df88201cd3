"""Exact minimum segmentation for small matrices.

:func:`exact_opt` uses the fact that rows interact only through the values
of the segment matrices: a list of K values is realizable iff every row can
be segmented using a sub-multiset of those values (each row takes at most one
interval from each matrix). Sizes K are tried upward from ``ceil(rho/2)``,
value multisets in non-increasing order, and each row is checked with a
memoized search that anchors every segment at the leftmost non-zero cell.

:func:`brute_force_opt` is an independent breadth-first search over whole
segment matrices, kept for cross-checking on tiny inputs.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Sequence

from .core import RowSegment, RowSegmentation, Segmentation, as_matrix, lower_bound, markers, positive_variation
from .packing import pack_rows
from .row_solvers import LimitExceeded

DEFAULT_MAX_CELLS = 64
DEFAULT_MAX_H = 6
BRUTE_MAX_CELLS = 12
BRUTE_MAX_H = 3


class BudgetExhausted(Exception):
    pass


@dataclass
class ExactResult:
    """Best segmentation found. ``optimal`` is False when the budget ran out first."""

    segmentation: Segmentation
    size: int
    optimal: bool
    lower_bound: int
    nodes: int = 0

    @property
    def opt_size(self) -> int | None:
        return self.size if self.optimal else None


class _RowOracle:
    """Can a row be segmented with at most ``counts[v-1]`` segments of each value v?"""

    def __init__(self, h: int, node_budget: int | None, deadline: float | None):
        self.h = h
        self.memo: dict[tuple, bool] = {}
        self.nodes = 0
        self.node_budget = node_budget
        self.deadline = deadline

    def _tick(self):
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise BudgetExhausted
        if self.deadline is not None and self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise BudgetExhausted

    def fits(self, res: tuple[int, ...], counts: tuple[int, ...]) -> bool:
        key = (res, counts)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        ok = self._fits(res, counts)
        self.memo[key] = ok
        return ok

    def _moves(self, res, counts):
        p = next(k for k, x in enumerate(res) if x)
        for v in range(min(res[p], len(counts)), 0, -1):
            if not counts[v - 1]:
                continue
            nxt_counts = counts[: v - 1] + (counts[v - 1] - 1,) + counts[v:]
            nxt = list(res)
            e = p
            while e < len(res) and res[e] >= v:
                nxt[e] -= v
                yield RowSegment(p + 1, e + 1, v), tuple(nxt), nxt_counts
                e += 1

    def _fits(self, res, counts) -> bool:
        if not any(res):
            return True
        if 2 * sum(counts) < markers(res):
            return False
        if sum(v * c for v, c in enumerate(counts, start=1)) < positive_variation(res):
            return False
        return any(self.fits(nxt, nc) for _, nxt, nc in self._moves(res, counts))

    def witness(self, res, counts) -> list[RowSegment]:
        out = []
        while any(res):
            for seg, nxt, nc in self._moves(res, counts):
                if self.fits(nxt, nc):
                    out.append(seg)
                    res, counts = nxt, nc
                    break
            else:  # pragma: no cover
                raise AssertionError("witness requested for an infeasible row")
        return out


def _incumbent(T) -> Segmentation:
    from .algorithms import ALGORITHMS

    return min((alg(T) for alg in ALGORITHMS.values()), key=len)


def exact_opt(
    T,
    *,
    max_cells: int = DEFAULT_MAX_CELLS,
    max_h: int = DEFAULT_MAX_H,
    time_budget: float | None = None,
    node_budget: int | None = None,
    override: bool = False,
) -> ExactResult:
    """Minimum-size segmentation of ``T``.

    Raises :class:`LimitExceeded` when ``T`` is larger than the caps (unless
    ``override``). When ``time_budget`` seconds or ``node_budget`` search
    nodes run out, the best known segmentation is returned with
    ``optimal=False``.
    """
    T = as_matrix(T)
    if not override and (T.m * T.n > max_cells or T.h > max_h):
        raise LimitExceeded(
            f"{T.m}x{T.n} matrix with h={T.h} exceeds exact limits (cells {max_cells}, h {max_h})"
        )
    lb = lower_bound(T)
    best = _incumbent(T)
    if len(best) <= lb:
        return ExactResult(best, len(best), True, lb)

    deadline = None if time_budget is None else time.monotonic() + time_budget
    oracle = _RowOracle(T.h, node_budget, deadline)
    rows = sorted({r for r in T.rows() if any(r)}, key=lambda r: (-markers(r), r))
    need = max(positive_variation(r) for r in rows)
    try:
        for K in range(lb, len(best)):
            for values in itertools.combinations_with_replacement(range(T.h, 0, -1), K):
                if sum(values) < need:
                    continue
                counts = tuple(values.count(v) for v in range(1, T.h + 1))
                for k, r in enumerate(rows):
                    if not oracle.fits(r, counts):
                        rows.insert(0, rows.pop(k))
                        break
                else:
                    per_row = [
                        RowSegmentation(oracle.witness(r, counts) if any(r) else [])
                        for r in T.rows()
                    ]
                    seg = pack_rows(per_row, T.n)
                    return ExactResult(seg, len(seg), True, lb, oracle.nodes)
    except BudgetExhausted:
        return ExactResult(best, len(best), False, lb, oracle.nodes)
    return ExactResult(best, len(best), True, lb, oracle.nodes)


def _row_intervals(res: Sequence[int], v: int) -> list[tuple[int, int] | None]:
    """Every interval of ``res`` that can absorb a segment of value ``v``, plus ``None``."""
    out: list[tuple[int, int] | None] = [None]
    n = len(res)
    for l in range(n):
        r = l
        while r < n and res[r] >= v:
            out.append((l, r))
            r += 1
    return out


def brute_force_opt(T) -> int:
    """Optimum size by breadth-first search over residual matrices.

    Only for matrices with at most 12 cells and entries at most 3.
    """
    T = as_matrix(T)
    if T.m * T.n > BRUTE_MAX_CELLS or T.h > BRUTE_MAX_H:
        raise LimitExceeded(
            f"brute force handles at most {BRUTE_MAX_CELLS} cells with h <= {BRUTE_MAX_H}"
        )
    m, n = T.shape
    start = tuple(tuple(r) for r in T.rows())
    zero = tuple((0,) * n for _ in range(m))
    frontier = {start}
    seen = {start}
    depth = 0
    while zero not in frontier:
        nxt_frontier = set()
        for state in frontier:
            # the first non-zero cell in row-major order must start some segment
            i = next(k for k, r in enumerate(state) if any(r))
            j = next(k for k, x in enumerate(state[i]) if x)
            for v in range(1, state[i][j] + 1):
                first = [(j, r) for r in range(j, n) if all(state[i][c] >= v for c in range(j, r + 1))]
                later = [_row_intervals(state[k], v) for k in range(i + 1, m)]
                for pick in itertools.product(first, *later):
                    rows = list(state)
                    for k, span in enumerate(pick, start=i):
                        if span is None:
                            continue
                        row = list(rows[k])
                        for c in range(span[0], span[1] + 1):
                            row[c] -= v
                        rows[k] = tuple(row)
                    key = tuple(rows)
                    if key not in seen:
                        seen.add(key)
                        nxt_frontier.add(key)
        frontier = nxt_frontier
        depth += 1
    return depth
