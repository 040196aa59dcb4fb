import random
from itertools import product

import pytest

from sympieri.characters import dim, restrict_decompose, tensor_decompose
from sympieri.diagrams import column, depth, diagrams_in_box, diagrams_up_to, iota, pad, width
from sympieri.pieri import multi_fundamental_mult, skew_pieri, tensor_fundamentals
from sympieri.stable import pieri_vertical_strip

# Paper table: (5,2) ⊗ omega_4 for Sp(10).
PAPER_TABLE = {
    (6, 3, 1, 1): 1, (6, 1, 1, 1): 1, (5, 3, 1, 1, 1): 1, (5, 3, 1): 1,
    (5, 1, 1, 1, 1): 1, (5, 1, 1): 1, (4, 3, 1, 1): 1, (4, 1, 1, 1): 1,
    (6, 2, 1, 1, 1): 1, (6, 2, 1): 1, (4, 2, 1, 1, 1): 1, (4, 2, 1): 1,
    (5, 2, 1, 1): 2, (5, 2): 1,
}


def test_paper_table():
    dec = skew_pieri((5, 2), 4, 5)
    assert dec.terms == PAPER_TABLE
    assert dec.total_multiplicity == 15


def test_paper_table_independent_of_n():
    base = skew_pieri((5, 2), 4, 5)
    for n in (5, 6, 7):
        assert skew_pieri((5, 2), 4, 5, n=n) == base


def test_empty_diagram_gives_fundamental():
    for m in range(1, 5):
        for r in range(1, m + 1):
            assert skew_pieri((), r, m).terms == {column(r): 1}


def test_preconditions():
    with pytest.raises(ValueError):
        skew_pieri((1, 1, 1), 1, 2)
    with pytest.raises(ValueError):
        skew_pieri((1,), 3, 2)
    with pytest.raises(ValueError):
        skew_pieri((3,), 1, 2, n=2)


def test_dimension_exhaustive_small_rank():
    for m in (1, 2, 3):
        for d in diagrams_up_to(6, m):
            for r in range(1, m + 1):
                dec = skew_pieri(d, r, m)
                assert sum(k * dim(f, m) for f, k in dec) == dim(d, m) * dim(column(r), m)


def test_dimension_sampled_rank_five():
    rng = random.Random(3)
    pool = diagrams_up_to(7, 5)
    for d in rng.sample(pool, 12):
        r = rng.randint(1, 5)
        dec = skew_pieri(d, r, 5)
        assert sum(k * dim(f, 5) for f, k in dec) == dim(d, 5) * dim(column(r), 5)


def test_shape_bounds():
    for m in (2, 3, 4):
        for d in diagrams_up_to(5, m):
            for r in range(1, m + 1):
                for f, _ in skew_pieri(d, r, m):
                    assert depth(f) <= m
                    padded = pad(d, m)
                    assert all(x <= y + 1 for x, y in zip(pad(f, m), padded))


def test_semistable_agreement():
    for m in range(1, 5):
        for d in diagrams_up_to(5, m):
            for r in range(1, min(m, m + 1 - depth(d)) + 1):
                assert skew_pieri(d, r, m) == pieri_vertical_strip(d, r, m)


def test_beyond_semistable_range_against_oracle():
    # (2,1,1) ⊗ omega_3 for Sp(6): r + depth = 6 > m + 1.
    assert skew_pieri((2, 1, 1), 3, 3) == tensor_decompose((2, 1, 1), column(3), 3)


def test_tensor_fundamentals_trivial_factor():
    assert tensor_fundamentals((2, 1), [0], 3).terms == {(2, 1): 1}
    with pytest.raises(ValueError):
        tensor_fundamentals((2, 1), [4], 3)


def test_multi_fundamental_oracle_example():
    assert multi_fundamental_mult((1,), [1], (1, 1), 1, 2) == 1


def test_multi_fundamental_k1_reproduces_pieri():
    n, m = 2, 3
    for d in diagrams_in_box(n, m):
        for r in range(1, m + 1):
            dec = skew_pieri(iota(d, n, m), r, m)
            from_mult = {
                iota(e, n + 1, m): multi_fundamental_mult(d, [m - r], e, n, m)
                for e in diagrams_in_box(n + 1, m)
            }
            assert {f: k for f, k in from_mult.items() if k} == dec.terms


def test_multi_fundamental_k0():
    for d in diagrams_in_box(2, 2):
        for e in diagrams_in_box(2, 2):
            assert multi_fundamental_mult(d, [], e, 2, 2) == int(d == e)


def test_multi_fundamental_matches_branching_side():
    # Right side of the duality: restrict tau^E of Sp(2(n+k)) to Sp(2n) x Sp(2)^k.
    n, m = 1, 2
    for k in (1, 2):
        for e in diagrams_in_box(n + k, m):
            table = restrict_decompose(e, n + k, [n] + [1] * k)
            for d in diagrams_in_box(n, m):
                for js in product(range(m + 1), repeat=k):
                    key = (d,) + tuple(((j,) if j else ()) for j in js)
                    assert multi_fundamental_mult(d, list(js), e, n, m) == table.get(key, 0)


def test_multi_fundamental_rejects_bad_shapes():
    with pytest.raises(ValueError):
        multi_fundamental_mult((3,), [1], (), 1, 2)
    with pytest.raises(ValueError):
        multi_fundamental_mult((1,), [3], (), 1, 2)
