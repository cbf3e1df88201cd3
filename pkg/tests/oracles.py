"""Slow, independent reference computations used only by the tests."""

from __future__ import annotations

import itertools

import numpy as np


def markers_np(row) -> int:
    padded = np.concatenate([[0], np.asarray(row, dtype=np.int64), [0]])
    return int(np.count_nonzero(np.diff(padded)))


def row_difference_np(row) -> int:
    padded = np.concatenate([[0], np.asarray(row, dtype=np.int64), [0]])
    return int(np.abs(np.diff(padded)).max())


def row_opt_bfs(row) -> int:
    """Fewest segments summing to ``row``, by breadth-first search over every interval and value."""
    start = tuple(int(x) for x in row)
    n = len(start)
    frontier, seen, depth = {start}, {start}, 0
    while not any(not any(s) for s in frontier):
        nxt = set()
        for s in frontier:
            for l in range(n):
                for r in range(l, n):
                    top = min(s[l : r + 1])
                    for v in range(1, top + 1):
                        t = s[:l] + tuple(x - v for x in s[l : r + 1]) + s[r + 1 :]
                        if t not in seen:
                            seen.add(t)
                            nxt.add(t)
        frontier, depth = nxt, depth + 1
    return depth


def is_island(runs: list[int]) -> bool:
    """``runs`` (compressed values) forms ``s X s`` with every inner run above ``s``."""
    return len(runs) >= 3 and runs[0] == runs[-1] and all(x > runs[0] for x in runs[1:-1])


def minimal_islands_bruteforce(max_len: int = 9) -> set[str]:
    """Compressed 0-islands over {0..3} that contain no smaller island, by definition."""
    found = set()
    for k in range(1, max_len - 1):
        for inner in itertools.product((1, 2, 3), repeat=k):
            runs = [0, *inner, 0]
            if any(a == b for a, b in zip(runs, runs[1:])):
                continue
            sub = any(
                is_island(runs[i : j + 1])
                for i in range(len(runs))
                for j in range(i + 2, len(runs))
                if (i, j) != (0, len(runs) - 1)
            )
            if not sub:
                found.add("".join(map(str, runs)))
    return found
