import pytest

from segmin.core import SegmentMatrix, Segmentation
from segmin.formats import (
    FormatError,
    format_matrix,
    format_segmentation,
    load_matrix,
    parse_matrix,
    parse_segmentation,
    save_matrix,
)


def test_matrix_round_trip(tmp_path):
    text = "# comment\n2 3\n1 0 1\n2 0 2\n"
    T = parse_matrix(text)
    assert T.tolist() == [[1, 0, 1], [2, 0, 2]]
    assert parse_matrix(format_matrix(T)) == T
    save_matrix(tmp_path / "t.txt", T)
    assert load_matrix(tmp_path / "t.txt") == T


@pytest.mark.parametrize(
    "text",
    ["", "2\n1 2\n", "1 2\n1\n", "2 2\n1 1\n", "1 2\n1 x\n", "1 1\n-1\n", "1 1\n4294967297\n", "0 3\n", "1 1\n1.5\n"],
)
def test_matrix_parse_errors(text):
    with pytest.raises(FormatError):
        parse_matrix(text)


def test_segmentation_round_trip():
    S = Segmentation([SegmentMatrix(2, {1: (1, 2), 2: (2, 3)}), SegmentMatrix(1, {2: (1, 1)})], 2, 3)
    back = parse_segmentation(format_segmentation(S))
    assert back.shape == S.shape
    assert back.segments == S.segments


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"m": 1}',
        '{"m": 1, "n": 1, "segments": [{"value": 0, "rows": [{"row": 1, "l": 1, "r": 1}]}]}',
        '{"m": 1, "n": 1, "segments": [{"value": 1, "rows": [{"row": 1, "l": 1, "r": 1}, {"row": 1, "l": 1, "r": 1}]}]}',
        '{"m": 1, "n": 1, "segments": [{"value": 1, "rows": [{"row": 1, "l": 1, "r": 2}]}]}',
    ],
)
def test_segmentation_parse_errors(text):
    with pytest.raises(FormatError):
        parse_segmentation(text)
