import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import row_difference_np, row_opt_bfs
from segmin.core import RowSegment, RowSegmentation, markers
from segmin.islands import BASE4_ADDITIVE_CONSTANT
from segmin.row_solvers import (
    EXACT,
    SWEEP,
    LimitExceeded,
    base3_steps,
    exact_single_row,
    find_islands,
    segment_row_base3,
    segment_row_base4,
    sweep_single_row,
    transform_to_bounded,
)


def rows_over(top, max_size=20):
    return st.lists(st.integers(0, top), min_size=1, max_size=max_size)


# base 3


def test_base3_examples():
    assert segment_row_base3([1, 2, 2, 1]).multiset() == sorted([RowSegment(2, 3, 1), RowSegment(1, 4, 1)])
    assert segment_row_base3([0, 2, 2, 0]).segments == [RowSegment(2, 3, 2)]
    assert len(segment_row_base3([0, 0, 0])) == 0


@pytest.mark.parametrize(
    "row,case",
    [
        ([1, 2, 1], "1"),
        ([0, 1, 0, 2], "2"),
        ([2, 1, 2], "3"),
        ([1, 2, 0, 2, 1], "4"),
        ([2, 0, 2], "5"),
        ([1, 2, 0, 2], "6"),
        ([2, 1], "base"),
    ],
)
def test_base3_first_case(row, case):
    assert next(base3_steps(row)).case == case


def test_base3_rejects_other_values():
    with pytest.raises(ValueError):
        segment_row_base3([3])


@given(rows_over(2, 30))
def test_base3_sums_and_bounds(row):
    S = segment_row_base3(row)
    rho = markers(row)
    assert S.sums_to(row)
    assert S.count(1) <= rho // 2
    assert S.count(2) <= (rho + 2) // 4


@given(rows_over(2, 30))
def test_base3_residuals_shrink(row):
    prev = markers(row)
    for step in base3_steps(row):
        assert min(step.residual) >= 0
        now = markers(step.residual)
        assert now <= prev
        prev = now
    assert prev == 0


# base 4


def test_base4_examples():
    assert segment_row_base4([0, 1, 2, 0]).multiset() == sorted([RowSegment(2, 3, 1), RowSegment(3, 3, 1)])
    assert segment_row_base4([0, 3, 0]).segments == [RowSegment(2, 2, 3)]
    assert len(segment_row_base4([1, 2, 3, 0, 3, 2, 1])) == 6


def test_find_islands_patterns():
    isl = find_islands([1, 2, 1])
    assert [i.pattern for i in isl] == ["010", "010"]
    assert isl[0].spans == ((2, 2),)


@given(rows_over(3, 30))
def test_base4_sums_and_bounds(row):
    S = segment_row_base4(row)
    rho = markers(row)
    assert S.sums_to(row)
    for v in (1, 2, 3):
        assert 2 * v * S.count(v) <= rho + 2 * v * BASE4_ADDITIVE_CONSTANT


@given(rows_over(3, 30))
def test_island_count_equals_half_markers_removed(row):
    isl = find_islands(row)
    assert sum(len(i.pattern) - 1 for i in isl) == markers(row)


# sweep and transform


def test_sweep_examples():
    assert sweep_single_row([1, 2, 1]).multiset() == sorted([RowSegment(2, 2, 1), RowSegment(1, 3, 1)])
    assert sweep_single_row([2, 1]).multiset() == sorted([RowSegment(1, 1, 1), RowSegment(1, 2, 1)])
    assert len(sweep_single_row([0, 0])) == 0


@given(rows_over(40))
def test_sweep_properties(row):
    S = sweep_single_row(row)
    assert S.sums_to(row)
    assert len(S) <= markers(row)
    assert all(s.value <= row_difference_np(row) for s in S)


def test_transform_example():
    S = RowSegmentation([RowSegment(1, 1, 1), RowSegment(2, 2, 2), RowSegment(3, 3, 1)])
    out = transform_to_bounded([1, 2, 1], S)
    assert out.multiset() == sorted([RowSegment(1, 3, 1), RowSegment(2, 2, 1)])


def test_transform_rejects_wrong_sum():
    with pytest.raises(ValueError):
        transform_to_bounded([1, 2], RowSegmentation([RowSegment(1, 2, 1)]))


@given(st.lists(st.tuples(st.integers(1, 8), st.integers(0, 7), st.integers(1, 9)), max_size=8))
def test_transform_bounds_values(raw):
    segs = RowSegmentation([(l, l + w, v) for l, w, v in raw])
    n = max((s.r for s in segs), default=1)
    row = [int(x) for x in segs.total(n)]
    out = transform_to_bounded(row, segs)
    assert out.sums_to(row)
    assert len(out) <= len(segs)
    ends = {s.r for s in out}
    assert not any(s.l - 1 in ends for s in out)
    assert all(s.value <= row_difference_np(row) for s in out)


# exact row


def test_exact_row_examples():
    assert len(exact_single_row([1, 2, 1])) == 2
    assert len(exact_single_row([1, 2, 2, 1])) == 2
    assert len(exact_single_row([0, 0])) == 0


def test_exact_row_caps():
    with pytest.raises(LimitExceeded):
        exact_single_row([1] * 13)
    with pytest.raises(LimitExceeded):
        exact_single_row([7])
    assert len(exact_single_row([7], override=True)) == 1


def test_exact_row_value_cap():
    S = exact_single_row([3], value_cap=2)
    assert S.sums_to([3]) and len(S) == 2


@settings(max_examples=60, deadline=None)
@given(rows_over(4, 6))
def test_exact_row_matches_bfs(row):
    S = exact_single_row(row)
    assert S.sums_to(row)
    assert len(S) == row_opt_bfs(row)


def test_solvers_never_beat_exact():
    rng = random.Random(7)
    for _ in range(200):
        row = [rng.randint(0, 5) for _ in range(rng.randint(1, 9))]
        best = len(EXACT(row))
        assert best <= len(SWEEP(row)) <= 2 * best
        assert best >= (markers(row) + 1) // 2


def test_solver_metadata():
    assert SWEEP.alpha == 2 and SWEEP.max_value_bound == "D"
    assert EXACT.alpha == 1
