"""Clebsch-Gordan multiplicities for irreducible Sp(2) = SL(2) representations.

A representation is labelled by its highest weight ``ell`` (dimension ``ell + 1``);
decompositions are ``{ell: multiplicity}`` dicts with positive values.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

Sl2Decomposition = dict[int, int]


def _check(ell: int) -> int:
    ell = int(ell)
    if ell < 0:
        raise ValueError(f"SL(2) highest weight must be nonnegative, got {ell}")
    return ell


def weight_string(ell: int) -> list[int]:
    """Weights ``ell, ell - 2, ..., -ell`` of the irreducible of highest weight ``ell``."""
    ell = _check(ell)
    return list(range(ell, -ell - 1, -2))


def cg_pair(a: int, b: int) -> Sl2Decomposition:
    a, b = _check(a), _check(b)
    return {ell: 1 for ell in range(a + b, abs(a - b) - 1, -2)}


def cg_multi(factors: Iterable[int]) -> Sl2Decomposition:
    """Decompose a tensor product of several irreducibles, folding left to right."""
    acc: Counter[int] = Counter({0: 1})
    for f in factors:
        f = _check(f)
        nxt: Counter[int] = Counter()
        for ell, mult in acc.items():
            for out in range(ell + f, abs(ell - f) - 1, -2):
                nxt[out] += mult
        acc = nxt
    return dict(sorted(acc.items(), reverse=True))


def cg_multiplicity(ell: int, factors: Iterable[int]) -> int:
    return cg_multi(factors).get(_check(ell), 0)


def dimension(decomp: Sl2Decomposition) -> int:
    return sum(mult * (ell + 1) for ell, mult in decomp.items())
