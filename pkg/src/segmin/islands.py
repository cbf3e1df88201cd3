"""Catalog of minimal islands over the alphabet {0, 1, 2, 3}.

An island is a run sequence ``s X s`` whose inner runs are all larger than
``s``. A minimal island contains no smaller island. Shifting an island down
by ``s`` gives its *pattern*, a compressed string such as ``"0120"``; islands
with the same pattern are segmented identically.

For every pattern we search for the smallest number of copies ``c`` and a
choice of one segmentation per copy such that the ``c`` copies together use
at most ``rho/2`` 1-segments, ``rho/4`` 2-segments and ``rho/6`` 3-segments,
where ``rho = c * markers(pattern)``. Copies that do not fill a whole batch
are segmented with a minimum-size segmentation instead; their total over all
patterns is the additive constant exported as :data:`BASE4_ADDITIVE_CONSTANT`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache

MAX_VALUE = 3
_TWO_THREE = ("", "2", "3", "23", "32", "323")

# (start, end, value) over 0-based interior positions of a pattern
Piece = tuple[int, int, int]


@dataclass(frozen=True)
class IslandPlan:
    pattern: str
    markers: int
    copies: int
    batch: tuple[tuple[Piece, ...], ...]
    leftover: tuple[Piece, ...]

    @property
    def batch_counts(self) -> tuple[int, int, int]:
        return _counts(p for plan in self.batch for p in plan)

    @property
    def leftover_counts(self) -> tuple[int, int, int]:
        return _counts(self.leftover)


def _counts(pieces) -> tuple[int, int, int]:
    out = [0, 0, 0]
    for _, _, v in pieces:
        out[v - 1] += 1
    return tuple(out)


def minimal_island_patterns() -> list[str]:
    """All 41 minimal island patterns.

    Inside a minimal 0-island at most one 1 occurs (two 1s would enclose a
    121-style island), and each side of it is an alternation of 2s and 3s that
    avoids ``232``.
    """
    pats = {"0" + left + "1" + right + "0" for left in _TWO_THREE for right in _TWO_THREE}
    pats |= {"0" + mid + "0" for mid in _TWO_THREE if mid}
    return sorted(pats, key=lambda s: (len(s), s))


@cache
def _pareto(profile: tuple[int, ...]) -> dict[tuple[int, int, int], tuple[Piece, ...]]:
    """Pareto-minimal (n1, n2, n3) count vectors of segmentations of ``profile``, with witnesses."""
    if not any(profile):
        return {(0, 0, 0): ()}
    p = next(i for i, x in enumerate(profile) if x)
    found: dict[tuple[int, int, int], tuple[Piece, ...]] = {}
    for v in range(1, profile[p] + 1):
        e = p
        while e < len(profile) and profile[e] >= v:
            rest = list(profile)
            for k in range(p, e + 1):
                rest[k] -= v
            for vec, pieces in _pareto(tuple(rest)).items():
                w = list(vec)
                w[v - 1] += 1
                w = tuple(w)
                if w not in found:
                    found[w] = ((p, e, v),) + pieces
            e += 1
    return {
        a: pieces
        for a, pieces in sorted(found.items())
        if not any(b != a and all(x <= y for x, y in zip(b, a)) for b in found)
    }


def _fits(total, copies: int, marks: int) -> bool:
    rho = copies * marks
    return 2 * total[0] <= rho and 4 * total[1] <= rho and 6 * total[2] <= rho


def plan_for(pattern: str, max_copies: int = 12) -> IslandPlan:
    profile = tuple(int(ch) for ch in pattern[1:-1])
    marks = len(pattern) - 1
    options = _pareto(profile)
    vecs = sorted(options)
    leftover_vec = min(vecs, key=lambda v: (sum(v), v[2], v[1]))
    for c in range(1, max_copies + 1):
        best = None
        for combo in itertools.combinations_with_replacement(vecs, c):
            total = tuple(sum(x[i] for x in combo) for i in range(3))
            if _fits(total, c, marks):
                key = (sum(total), total[::-1])
                if best is None or key < best[0]:
                    best = (key, combo)
        if best is not None:
            batch = tuple(options[v] for v in best[1])
            return IslandPlan(pattern, marks, c, batch, options[leftover_vec])
    raise RuntimeError(f"no bounded batch for island {pattern} within {max_copies} copies")


@cache
def island_catalog() -> dict[str, IslandPlan]:
    return {p: plan_for(p) for p in minimal_island_patterns()}


def _additive_constant() -> int:
    per_value = [0, 0, 0]
    for plan in island_catalog().values():
        for v, count in enumerate(plan.leftover_counts):
            per_value[v] += (plan.copies - 1) * count
    return max(per_value)


BASE4_ADDITIVE_CONSTANT = _additive_constant()
