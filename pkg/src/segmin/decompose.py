"""Positional base-b splitting of a matrix and the matching recombination."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import IntensityMatrix, SegmentMatrix, Segmentation, as_matrix


@dataclass(frozen=True)
class DigitStack:
    """Digit layers ``P_0..P_k`` with ``T = sum(base**l * P_l)``."""

    base: int
    layers: tuple[np.ndarray, ...]

    def __len__(self):
        return len(self.layers)

    def reconstruct(self) -> np.ndarray:
        out = np.zeros_like(self.layers[0])
        for ell, layer in enumerate(self.layers):
            out += self.base**ell * layer
        return out


def num_digits(x: int, base: int) -> int:
    """Number of base-``base`` digits of ``x`` (1 for ``x == 0``)."""
    count = 1
    while x >= base:
        x //= base
        count += 1
    return count


def ceil_log(x: int, base: int) -> int:
    """Smallest ``e >= 0`` with ``base**e >= x``."""
    e, p = 0, 1
    while p < x:
        p *= base
        e += 1
    return e


def split_by_base(T, b: int) -> DigitStack:
    T = as_matrix(T)
    if int(b) != b or b < 2:
        raise ValueError(f"base must be an integer >= 2, got {b!r}")
    rest = T.cells.copy()
    layers = []
    for _ in range(num_digits(T.h, b)):
        digit = rest % b
        digit.setflags(write=False)
        layers.append(digit)
        rest //= b
    return DigitStack(int(b), tuple(layers))


def combine_scaled(parts, shape: tuple[int, int] | None = None) -> Segmentation:
    """Union of per-layer segmentations with each value multiplied by its layer scale.

    ``parts`` is a sequence of ``(scale, Segmentation)`` pairs. ``shape`` is
    only needed when ``parts`` is empty.
    """
    parts = list(parts)
    if shape is None:
        if not parts:
            raise ValueError("shape is required when there are no layers")
        shape = parts[0][1].shape
    m, n = shape
    out = []
    for scale, seg in parts:
        if seg.shape != (m, n):
            raise ValueError(f"layer segmentation has shape {seg.shape}, expected {shape}")
        if scale < 1:
            raise ValueError("layer scale must be positive")
        out.extend(SegmentMatrix(scale * s.value, s.intervals) for s in seg.segments)
    return Segmentation(out, m, n)


def layer_matrix(stack: DigitStack, ell: int) -> IntensityMatrix:
    return IntensityMatrix(stack.layers[ell])
