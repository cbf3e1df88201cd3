import pytest

from segmin.core import lower_bound, verify
from segmin.generators import (
    adversarial_witness,
    gaussian_dataset,
    gen_adversarial,
    gen_gaussian,
    gen_harmonic,
    gen_random,
    harmonic_lower_bound,
)


def test_gaussian_single_cell_is_zero():
    assert gen_gaussian(1, 1, 1, (1, 1), sigma=1, seed=3).tolist() == [[0]]


def test_gaussian_zero_amplitude():
    assert gen_gaussian(5, 6, amp_range=(0, 0), seed=1).h == 0


def test_gaussian_is_seeded():
    assert gen_gaussian(20, 20, seed=5) == gen_gaussian(20, 20, seed=5)
    assert gen_gaussian(20, 20, seed=5) != gen_gaussian(20, 20, seed=6)


@pytest.mark.parametrize("sigma", [0, -1.0])
def test_gaussian_rejects_bad_sigma(sigma):
    with pytest.raises(ValueError):
        gen_gaussian(3, 3, sigma=sigma)


def test_gaussian_calibration_rate():
    # most default 50x50 draws land in the calibration window
    hits = sum(
        15 <= T.h <= 25 and T.D <= 3 for T in (gen_gaussian(50, 50, seed=s) for s in range(40))
    )
    assert hits >= 30


def test_gaussian_dataset_window():
    ds = gaussian_dataset(5)
    assert len(ds) == 5
    assert all(15 <= T.h <= 25 and T.D <= 3 for _, T in ds)
    assert [s for s, _ in ds] == sorted(s for s, _ in ds)


@pytest.mark.parametrize(
    "b,k,row",
    [(2, 1, [1, 2, 1]), (3, 1, [1, 2, 3, 2, 1]), (3, 2, [4, 8, 9, 8, 4])],
)
def test_adversarial_rows(b, k, row):
    assert gen_adversarial(b, k).tolist() == [row]


@pytest.mark.parametrize("b", [2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_adversarial_witness(b, k):
    T = gen_adversarial(b, k)
    W = adversarial_witness(b, k)
    assert len(W) == b and verify(T, W)
    assert lower_bound(T) == b


def test_harmonic():
    assert gen_harmonic(3, 2).tolist() == [[1, 0, 1], [2, 0, 2]]
    assert harmonic_lower_bound(4, 2) == 4
    with pytest.raises(ValueError):
        gen_harmonic(1, 2)


def test_random():
    T = gen_random(4, 5, 3, seed=1)
    assert T.shape == (4, 5) and T.h <= 3
    assert T == gen_random(4, 5, 3, seed=1)
