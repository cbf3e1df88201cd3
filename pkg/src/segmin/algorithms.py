"""Full-matrix approximation pipelines.

``alg_base`` splits the matrix by digits first and segments each digit layer
row by row. ``alg_logD`` segments the rows of the original matrix first and
splits every row segment into digits afterwards.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .core import IntensityMatrix, RowSegment, RowSegmentation, Segmentation, as_matrix
from .decompose import ceil_log, combine_scaled, split_by_base
from .islands import BASE4_ADDITIVE_CONSTANT
from .packing import pack_rows
from .row_solvers import (
    SWEEP,
    SingleRowSolver,
    segment_row_base3,
    segment_row_base4,
    transform_to_bounded,
)

SUPPORTED_BASES = (2, 3, 4)

# Additive per-layer slack of the base-4 pipeline: one C for each of the three values.
BASE4_LAYER_CONSTANT = 3 * BASE4_ADDITIVE_CONSTANT


def segment_row_binary(row) -> RowSegmentation:
    """Optimal segmentation of a 0/1 row: one 1-segment per maximal run of ones."""
    segs = []
    start = None
    for col, x in enumerate(list(row) + [0], start=1):
        if x not in (0, 1):
            raise ValueError(f"column {col} holds {x}, expected 0 or 1")
        if x and start is None:
            start = col
        elif not x and start is not None:
            segs.append(RowSegment(start, col - 1, 1))
            start = None
    return RowSegmentation(segs)


_LAYER_SOLVERS: dict[int, Callable] = {
    2: segment_row_binary,
    3: segment_row_base3,
    4: segment_row_base4,
}


def alg_base(T, b: int) -> Segmentation:
    T = as_matrix(T)
    if b not in _LAYER_SOLVERS:
        raise ValueError(f"base must be one of {SUPPORTED_BASES}, got {b!r}")
    solve_row = _LAYER_SOLVERS[b]
    stack = split_by_base(T, b)
    parts = []
    for ell, layer in enumerate(stack.layers):
        rows = [solve_row([int(x) for x in r]) for r in layer]
        parts.append((b**ell, pack_rows(rows, T.n)))
    return combine_scaled(parts, shape=T.shape)


def digit_split(seg: RowSegment, base: int = 2) -> list[RowSegment]:
    """Split one row segment into one segment per non-zero base-``base`` digit of its value."""
    out = []
    v, scale = seg.value, 1
    while v:
        d = v % base
        if d:
            out.append(RowSegment(seg.l, seg.r, d * scale))
        v //= base
        scale *= base
    return out


def alg_logD(T, solver: SingleRowSolver = SWEEP, digit_base: int = 2) -> Segmentation:
    T = as_matrix(T)
    if digit_base < 2:
        raise ValueError("digit_base must be >= 2")
    rows = []
    for r in T.rows():
        bounded = transform_to_bounded(r, solver(r))
        rows.append(RowSegmentation([d for s in bounded for d in digit_split(s, digit_base)]))
    return pack_rows(rows, T.n)


ALGORITHMS: dict[str, Callable[[IntensityMatrix], Segmentation]] = {
    "b2": lambda T: alg_base(T, 2),
    "b3": lambda T: alg_base(T, 3),
    "b4": lambda T: alg_base(T, 4),
    "logd": lambda T: alg_logD(T, SWEEP),
}


def theoretical_factor(alg: str, h: int, D: int, alpha: Fraction = SWEEP.alpha) -> Fraction:
    """Leading approximation factor of ``alg`` on a matrix with maximum ``h`` and row-difference ``D``."""
    if alg == "b2":
        return Fraction(ceil_log(h, 2) + 1)
    if alg == "b3":
        return Fraction(3, 2) * (ceil_log(h, 3) + 1)
    if alg == "b4":
        return Fraction(11, 6) * (ceil_log(h, 4) + 1)
    if alg in ("logd", "logd_exact"):
        return Fraction(alpha) * (ceil_log(D, 2) + 1)
    raise ValueError(f"unknown algorithm {alg!r}")


def size_bound(alg: str, T, opt: int) -> Fraction:
    """Worst-case size guaranteed for ``alg`` on ``T`` given the optimum ``opt``."""
    T = as_matrix(T)
    if alg == "b2":
        return Fraction(opt * (ceil_log(T.h, 2) + 1))
    if alg == "b3":
        return (Fraction(3, 2) * opt + Fraction(1, 2)) * (ceil_log(T.h, 3) + 1)
    if alg == "b4":
        return (Fraction(11, 6) * opt + BASE4_LAYER_CONSTANT) * (ceil_log(T.h, 4) + 1)
    if alg == "logd":
        return SWEEP.alpha * (ceil_log(T.D, 2) + 1) * opt
    raise ValueError(f"unknown algorithm {alg!r}")
