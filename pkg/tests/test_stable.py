import pytest

from sympieri.characters import dim, tensor_decompose
from sympieri.diagrams import column, depth, diagrams_up_to, size
from sympieri.pieri import skew_pieri
from sympieri.stable import pieri_vertical_strip, stable_tensor


def test_stable_tensor_examples():
    assert stable_tensor((1,), (1,), 2).terms == {(2,): 1, (1, 1): 1, (): 1}
    assert stable_tensor((3, 1), (), 3).terms == {(3, 1): 1}
    assert stable_tensor((1,), (1, 1, 1), 4) == skew_pieri((1,), 3, 4)


def test_stable_tensor_rejects_unstable():
    with pytest.raises(ValueError):
        stable_tensor((1, 1), (1,), 2)


def test_stable_tensor_against_oracle():
    for m in (2, 3):
        for d in diagrams_up_to(3, m):
            for e in diagrams_up_to(3, m - depth(d)):
                assert stable_tensor(d, e, m) == tensor_decompose(d, e, m), (d, e, m)


def test_vertical_strip_examples():
    assert pieri_vertical_strip((1,), 1, 2).terms == {(2,): 1, (1, 1): 1, (): 1}
    for m in range(1, 5):
        for r in range(1, m + 1):
            assert pieri_vertical_strip((), r, m).terms == {column(r): 1}


def test_vertical_strip_rejects_outside_semistable_range():
    with pytest.raises(ValueError):
        pieri_vertical_strip((1, 1, 1), 2, 3)
    with pytest.raises(ValueError):
        pieri_vertical_strip((1,), 0, 3)


def test_vertical_strip_matches_stable_tensor():
    for m in range(1, 6):
        for d in diagrams_up_to(6, m):
            for r in range(1, m - depth(d) + 1):
                assert pieri_vertical_strip(d, r, m) == stable_tensor(d, column(r), m)


def test_vertical_strip_shape_changes():
    for m in range(1, 5):
        for d in diagrams_up_to(5, m):
            for r in range(1, m + 2 - depth(d)):
                if r > m:
                    continue
                dec = pieri_vertical_strip(d, r, m)
                for f, _ in dec:
                    assert (size(f) - size(d)) % 2 == r % 2
                    assert abs(size(f) - size(d)) <= r
                assert dec.total_multiplicity > 0
                assert sum(k * dim(f, m) for f, k in dec) == dim(d, m) * dim(column(r), m)
