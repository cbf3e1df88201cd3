"""Instance generators.

All random generators draw from numpy's PCG64 stream (``default_rng``), so a
seed gives the same matrix on every platform.
"""

from __future__ import annotations

import math

import numpy as np

from .core import IntensityMatrix, SegmentMatrix, Segmentation

# Density gain and border margin were calibrated so that 50x50 instances with
# amplitudes in 1..25 mostly land at h in 15..25 with row-difference 2.
GAUSSIAN_GAIN = 1.75
GAUSSIAN_MARGIN = 2.0


def gen_gaussian(
    m: int,
    n: int,
    num_peaks: int = 7,
    amp_range: tuple[float, float] = (1, 25),
    sigma: float | None = None,
    seed: int | None = 0,
    gain: float = GAUSSIAN_GAIN,
    margin: float = GAUSSIAN_MARGIN,
) -> IntensityMatrix:
    """Floor of a sum of ``num_peaks`` isotropic bivariate normal bumps.

    Each bump is ``gain * A * phi((x - c) / sigma)`` where ``phi`` is the
    standard bivariate normal density (peak ``1/(2 pi)``), ``A`` is uniform in
    ``amp_range`` and the center ``c`` is uniform over the grid, kept
    ``margin * sigma`` away from the border when the grid is large enough.
    Cells are evaluated at their centers. ``sigma`` defaults to
    ``min(m, n) / 6`` cells.
    """
    if m < 1 or n < 1:
        raise ValueError("grid dimensions must be positive")
    if sigma is None:
        sigma = min(m, n) / 6
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    lo, hi = amp_range
    if lo < 0 or hi < lo:
        raise ValueError(f"invalid amplitude range {amp_range}")
    rng = np.random.default_rng(seed)
    amps = rng.uniform(lo, hi, num_peaks)
    cy = _centers(rng, m, margin * sigma, num_peaks)
    cx = _centers(rng, n, margin * sigma, num_peaks)
    y = np.arange(m)[:, None] + 0.5
    x = np.arange(n)[None, :] + 0.5
    total = np.zeros((m, n))
    for a, yy, xx in zip(amps, cy, cx):
        total += a * np.exp(-((y - yy) ** 2 + (x - xx) ** 2) / (2 * sigma**2)) / (2 * math.pi)
    return IntensityMatrix(np.floor(gain * total).astype(np.int64))


def _centers(rng, size: int, pad: float, k: int) -> np.ndarray:
    if size > 2 * pad:
        return rng.uniform(pad, size - pad, k)
    return rng.uniform(0, size, k)


def gaussian_dataset(
    count: int = 30,
    m: int = 50,
    n: int = 50,
    seed: int = 0,
    h_range: tuple[int, int] = (15, 25),
    max_D: int = 3,
    max_tries: int = 10_000,
    **kwargs,
) -> list[tuple[int, IntensityMatrix]]:
    """First ``count`` instances (by seed ``seed, seed+1, ...``) inside the h and D window.

    Returns ``(seed, matrix)`` pairs.
    """
    out = []
    for s in range(seed, seed + max_tries):
        T = gen_gaussian(m, n, seed=s, **kwargs)
        if h_range[0] <= T.h <= h_range[1] and T.D <= max_D:
            out.append((s, T))
            if len(out) == count:
                return out
    raise RuntimeError(f"only {len(out)} of {count} instances fell in the window after {max_tries} seeds")


def adversarial_layer(b: int) -> list[int]:
    """``1 2 .. b-1 0 b-1 .. 2 1``."""
    up = list(range(1, b))
    return up + [0] + up[::-1]


def gen_adversarial(b: int, k: int) -> IntensityMatrix:
    """Single row that defeats any digit-splitting algorithm in base ``b``.

    ``k`` copies of :func:`adversarial_layer` in the low digits plus a lone 1
    in the middle column of digit ``k``. The optimum is ``b`` while splitting
    by base ``b`` costs ``2(b-1)k + 1`` segments.
    """
    if b < 2 or k < 1:
        raise ValueError("need b >= 2 and k >= 1")
    layer = adversarial_layer(b)
    row = [sum(b**ell * x for ell in range(k)) for x in layer]
    row[b - 1] += b**k
    return IntensityMatrix([row])


def adversarial_witness(b: int, k: int) -> Segmentation:
    """The b-segment solution of :func:`gen_adversarial`."""
    ones = sum(b**ell for ell in range(k))
    segs = [SegmentMatrix(ones, {1: (i, 2 * b - i)}) for i in range(1, b)]
    segs.append(SegmentMatrix(1, {1: (b, b)}))
    return Segmentation(segs, 1, 2 * b - 1)


def gen_harmonic(b: int, cols: int) -> IntensityMatrix:
    """Rows ``i 0 i 0 .. i`` for ``i = 1..b-1`` with ``cols`` non-zeros each."""
    if b < 2 or cols < 1:
        raise ValueError("need b >= 2 and cols >= 1")
    rows = [[i if j % 2 == 0 else 0 for j in range(2 * cols - 1)] for i in range(1, b)]
    return IntensityMatrix(rows)


def harmonic_number(k: int) -> float:
    return sum(1 / i for i in range(1, k + 1))


def harmonic_lower_bound(b: int, cols: int) -> int:
    """``ceil(H_{b-1} * cols)``, the fewest segments any segmentation of :func:`gen_harmonic` can use."""
    from fractions import Fraction

    H = sum(Fraction(1, i) for i in range(1, b))
    return math.ceil(H * cols)


def gen_random(m: int, n: int, h: int, seed: int | None = 0) -> IntensityMatrix:
    """Independent uniform cells in ``0..h``."""
    if m < 1 or n < 1 or h < 0:
        raise ValueError("need m, n >= 1 and h >= 0")
    rng = np.random.default_rng(seed)
    return IntensityMatrix(rng.integers(0, h + 1, size=(m, n), dtype=np.int64))
