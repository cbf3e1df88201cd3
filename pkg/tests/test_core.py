import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import markers_np, row_difference_np
from segmin.core import (
    DimensionMismatch,
    IntensityMatrix,
    RowSegment,
    RowSegmentation,
    SegmentMatrix,
    Segmentation,
    lower_bound,
    markers,
    positive_variation,
    rho,
    row_difference,
    verify,
)

rows = st.lists(st.integers(0, 9), min_size=1, max_size=15)


def test_matrix_basic_properties():
    T = IntensityMatrix([[1, 0, 1], [2, 0, 2]])
    assert T.shape == (2, 3)
    assert T.h == 2
    assert T.D == 2
    assert T.row(2) == (2, 0, 2)
    assert T == IntensityMatrix(T)
    assert hash(T) == hash(IntensityMatrix([[1, 0, 1], [2, 0, 2]]))


def test_matrix_cells_are_read_only():
    T = IntensityMatrix([[1, 2]])
    with pytest.raises(ValueError):
        T.cells[0, 0] = 5


@pytest.mark.parametrize(
    "bad",
    [[[1, -1]], [1, 2], [[1.5, 2]], [[True, False]], [[2**32 + 1]], np.zeros((2, 2, 2), dtype=int)],
)
def test_matrix_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        IntensityMatrix(bad)


def test_matrix_accepts_limit_value():
    assert IntensityMatrix([[2**32]]).h == 2**32


def test_zero_matrix():
    T = IntensityMatrix([[0, 0], [0, 0]])
    assert T.h == 0 and T.D == 0
    assert lower_bound(T) == 0


@pytest.mark.parametrize(
    "row,expected",
    [([1, 2, 1], 4), ([0, 0], 0), ([3], 2), ([1, 1, 1], 2), ([4, 8, 9, 8, 4], 6), ([1, 0, 1], 4)],
)
def test_markers_examples(row, expected):
    assert markers(row) == expected


@given(rows)
def test_markers_matches_numpy(row):
    assert markers(row) == markers_np(row)


@given(rows)
def test_row_difference_matches_numpy(row):
    assert row_difference(row) == row_difference_np(row)


def test_rho_and_lower_bound():
    T = [[1, 2, 1], [0, 3, 0]]
    assert rho(T) == 4
    assert lower_bound(T) == 2
    assert lower_bound([[4, 8, 9, 8, 4]]) == 3


def test_positive_variation():
    assert positive_variation([1, 3, 2, 4, 0]) == 5
    assert positive_variation([0, 0]) == 0


def test_row_segmentation_helpers():
    rs = RowSegmentation([(1, 3, 1), (2, 2, 1)])
    assert rs.sums_to([1, 2, 1])
    assert not rs.sums_to([1, 1, 1])
    assert rs.counts_by_value == {1: 2}
    assert rs.count(2) == 0
    with pytest.raises(ValueError):
        RowSegmentation([(2, 1, 1)])
    with pytest.raises(ValueError):
        RowSegmentation([(1, 1, 0)])


def test_segment_matrix_validation():
    with pytest.raises(ValueError):
        SegmentMatrix(0, {1: (1, 1)})
    with pytest.raises(ValueError):
        SegmentMatrix(1, {})
    with pytest.raises(ValueError):
        SegmentMatrix(1, {1: (3, 2)})
    s = SegmentMatrix(2, {2: (1, 2), 1: (2, 3)})
    assert list(s.intervals) == [1, 2]
    assert s.to_array(2, 3).tolist() == [[0, 2, 2], [2, 2, 0]]


def test_segmentation_rejects_out_of_range():
    with pytest.raises(ValueError):
        Segmentation([SegmentMatrix(1, {3: (1, 1)})], 2, 2)


def test_verify_ok_and_mismatch():
    T = [[1, 2, 1]]
    S = Segmentation([SegmentMatrix(1, {1: (1, 3)}), SegmentMatrix(1, {1: (2, 2)})], 1, 3)
    assert verify(T, S)
    bad = Segmentation([SegmentMatrix(1, {1: (1, 3)})], 1, 3)
    v = verify(T, bad)
    assert not v
    assert v.cell == (1, 2) and v.residual == 1
    assert "(1, 2)" in str(v)


def test_verify_empty_segmentation_of_zero_matrix():
    assert verify([[0, 0]], Segmentation([], 1, 2))


def test_verify_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        verify([[1]], Segmentation([], 1, 2))


def test_row_projection():
    S = Segmentation([SegmentMatrix(3, {1: (1, 2), 2: (2, 2)})], 2, 2)
    assert S.row_projection(2).segments == [RowSegment(2, 2, 3)]
    assert S.row_projection(1).sums_to([3, 3])
