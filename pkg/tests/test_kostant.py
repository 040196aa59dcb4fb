from itertools import product

import pytest

from conftest import brute_kostant
from sympieri.kostant import kostant_partition, lepowsky_mult, sigma_generators


def test_generators():
    gens = sigma_generators(3)
    assert len(gens) == 6
    for g in gens:
        assert g[-1] in (1, -1)
        assert sorted(g[:-1]) == [0, 0, 1]


@pytest.mark.parametrize("v, expected", [
    ((0, 0), 1),
    ((0, 0, 0, 0, 0, 0), 1),
    ((1, 0, 0, 1, 0, 0), 2),
    ((1, 0, 0, 1, 0, 4), 0),
])
def test_examples(v, expected):
    assert kostant_partition(v) == expected
    assert brute_kostant(v) == expected


def test_rejects_short_vectors():
    with pytest.raises(ValueError):
        kostant_partition((3,))


def test_against_enumeration():
    for n in (1, 2, 3):
        for head in product(range(3), repeat=n):
            for last in range(-4, 5):
                v = head + (last,)
                assert kostant_partition(v) == brute_kostant(v), v


def test_vanishing():
    assert kostant_partition((-1, 2, 1)) == 0
    assert kostant_partition((1, 1, 1)) == 0  # parity


def test_lepowsky_examples():
    e = (4, 4, 4, 3, 3)
    assert lepowsky_mult((5, 4, 4, 4, 3, 1), e, 1, 5) == 2
    assert lepowsky_mult((5, 4, 4, 4, 3, 3), e, 1, 5) == 1
    assert lepowsky_mult((4, 4, 4, 3, 3, 2), e, 1, 5) == 0
    assert lepowsky_mult((4, 4, 4, 3, 3, 1), e, 1, 5) == 1
    assert lepowsky_mult(e, e, 0, 5) == 1


def test_lepowsky_rejects_non_interlacing():
    with pytest.raises(ValueError):
        lepowsky_mult((1, 1), (3,), 0, 1)
