import numpy as np
from hypothesis import given, strategies as st

from segmin.core import RowSegmentation
from segmin.packing import pack_rows
from segmin.row_solvers import sweep_single_row


def test_pack_counts_max_per_value():
    rows = [RowSegmentation([(1, 1, 1), (2, 2, 1), (1, 2, 2)]), RowSegmentation([(1, 2, 1)])]
    S = pack_rows(rows, 2)
    assert len(S) == 3  # two 1-matrices and one 2-matrix
    assert S.to_array().tolist() == [[3, 3], [1, 1]]


def test_pack_empty():
    assert len(pack_rows([RowSegmentation(), RowSegmentation()], 3)) == 0


@given(st.lists(st.lists(st.integers(0, 6), min_size=5, max_size=5), min_size=1, max_size=5))
def test_pack_preserves_sum_and_size(cells):
    rows = [sweep_single_row(r) for r in cells]
    S = pack_rows(rows, 5)
    assert np.array_equal(S.to_array(), np.array(cells))
    values = {s.value for r in rows for s in r}
    assert len(S) == sum(max(r.count(v) for r in rows) for v in values)
