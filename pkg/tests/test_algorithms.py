from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from segmin.algorithms import (
    ALGORITHMS,
    alg_base,
    alg_logD,
    digit_split,
    segment_row_binary,
    size_bound,
    theoretical_factor,
)
from segmin.core import RowSegment, lower_bound, verify
from segmin.generators import gen_adversarial
from segmin.row_solvers import EXACT

matrices = arrays(np.int64, st.tuples(st.integers(1, 6), st.integers(1, 8)), elements=st.integers(0, 40))


@settings(deadline=None, max_examples=80)
@given(matrices)
def test_every_pipeline_verifies(cells):
    for name, alg in ALGORITHMS.items():
        S = alg(cells)
        assert verify(cells, S), name
        assert len(S) >= lower_bound(cells)


def test_zero_matrix_gives_empty_segmentation():
    for alg in ALGORITHMS.values():
        assert len(alg([[0, 0], [0, 0]])) == 0


def test_binary_row():
    assert [tuple(s) for s in segment_row_binary([1, 1, 0, 1])] == [(1, 2, 1), (4, 4, 1)]
    with pytest.raises(ValueError):
        segment_row_binary([2])


def test_unsupported_base():
    with pytest.raises(ValueError):
        alg_base([[1]], 5)


def test_adversarial_b3_k2_size():
    assert len(alg_base(gen_adversarial(3, 2), 3)) == 9


def test_digit_split():
    assert digit_split(RowSegment(1, 2, 5)) == [RowSegment(1, 2, 1), RowSegment(1, 2, 4)]
    assert digit_split(RowSegment(1, 1, 5), base=3) == [RowSegment(1, 1, 2), RowSegment(1, 1, 3)]


def test_logd_values_are_powers_of_two_times_digits():
    T = [[3, 7, 2, 9, 9, 1]]
    S = alg_logD(T)
    assert verify(T, S)
    assert all(v & (v - 1) == 0 for v in S.values())


def test_logd_with_exact_row_solver():
    T = [[1, 2, 3, 2, 1], [0, 4, 4, 0, 1]]
    assert verify(T, alg_logD(T, EXACT))


def test_theoretical_factors():
    assert theoretical_factor("b2", 8, 1) == 4
    assert theoretical_factor("b3", 9, 1) == Fraction(9, 2)
    assert theoretical_factor("b4", 16, 1) == Fraction(11, 2)
    assert theoretical_factor("logd", 99, 4) == 6
    assert theoretical_factor("logd", 99, 4, alpha=Fraction(1)) == 3
    with pytest.raises(ValueError):
        theoretical_factor("nope", 1, 1)


def test_size_bound():
    T = [[4, 8, 9, 8, 4]]
    assert size_bound("b3", T, 3) == Fraction(5) * 3
    assert size_bound("logd", T, 3) == 2 * 3 * 3
