"""Weight-multiplicity characters of symplectic representations.

This is the brute-force oracle the combinatorial rules are checked against.
The character of ``tau^G_{2n+2}`` is assembled from rank-``n`` characters:
each ``E`` doubly interlacing ``G`` contributes ``char(E)`` times the product
of the SL(2) weight strings of its interlacing profile, on the last
coordinate.  Decomposition peels off the lexicographically greatest weight.
"""

from __future__ import annotations

import os
from collections import Counter
from functools import lru_cache
from itertools import product
from math import prod
from typing import Mapping, Sequence

from .branching import enumerate_down, rho_profile
from .decomposition import Decomposition
from .diagrams import Diagram, canonical, depth, diagrams_in_box, iota
from .sl2 import weight_string

Weight = tuple[int, ...]
Character = dict[Weight, int]
JointCharacter = dict[tuple[Weight, Weight], int]

DEFAULT_TENSOR_CAP = 3
DEFAULT_EXTERIOR_CAP = 24


class NotACharacterError(ValueError):
    """Raised when peeling meets a negative or non-dominant leading weight."""


def tensor_cap() -> int:
    """Largest rank the tensor oracle accepts (``SYMPIERI_ORACLE_CAP`` overrides)."""
    raw = os.environ.get("SYMPIERI_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_TENSOR_CAP


def exterior_cap() -> int:
    """Largest ``2nm`` for exterior-algebra characters; scales with the tensor cap."""
    raw = os.environ.get("SYMPIERI_ORACLE_CAP")
    return 8 * int(raw) if raw else DEFAULT_EXTERIOR_CAP


def _string_product(rho: Sequence[int]) -> Counter[int]:
    acc: Counter[int] = Counter({0: 1})
    for r in rho:
        nxt: Counter[int] = Counter()
        for w, c in acc.items():
            for s in weight_string(r):
                nxt[w + s] += c
        acc = nxt
    return acc



@lru_cache(maxsize=None)
def _sp_character(d: Diagram, n: int) -> tuple[tuple[Weight, int], ...]:
    if n == 0:
        return (((), 1),)
    acc: Counter[Weight] = Counter()
    for e in enumerate_down(d, n - 1):
        last = _string_product(rho_profile(d, e, n - 1))
        for w, c in _sp_character(e, n - 1):
            for s, k in last.items():
                acc[w + (s,)] += c * k
    return tuple(sorted(acc.items(), reverse=True))


def sp_character(d: Sequence[int], n: int) -> Character:
    """Weight multiplicities of ``tau^D_{2n}``."""
    d = canonical(d)
    if n < 0 or depth(d) > n:
        raise ValueError(f"D={d} has more than n={n} rows")
    # The cache holds immutable tuples (lru_cache is safe for concurrent use); callers get a fresh dict.
    return dict(_sp_character(d, n))


@lru_cache(maxsize=None)
def _dim(d: Diagram, n: int) -> int:
    if n == 0:
        return 1
    return sum(
        _dim(e, n - 1) * prod(r + 1 for r in rho_profile(d, e, n - 1))
        for e in enumerate_down(d, n - 1)
    )


def dim(d: Sequence[int], n: int) -> int:
    """Dimension of ``tau^D_{2n}`` (total mass of its character)."""
    d = canonical(d)
    if n < 0 or depth(d) > n:
        raise ValueError(f"D={d} has more than n={n} rows")
    return _dim(d, n)


def mass(c: Mapping) -> int:
    return sum(c.values())


def is_dominant(w: Sequence[int]) -> bool:
    return all(x >= y for x, y in zip(w, w[1:])) and (not w or w[-1] >= 0)


def multiply(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> Character:
    acc: Counter[Weight] = Counter()
    for wa, ca in a.items():
        for wb, cb in b.items():
            acc[tuple(x + y for x, y in zip(wa, wb))] += ca * cb
    return {w: c for w, c in acc.items() if c}


def decompose(c: Mapping[Weight, int], n: int) -> Decomposition:
    """Split a character into irreducibles by highest-weight peeling."""
    rest: Counter[Weight] = Counter({w: k for w, k in c.items() if k})
    for w in rest:
        if len(w) != n:
            raise ValueError(f"weight {w} has length {len(w)}, expected {n}")
    found: dict[Diagram, int] = {}
    for w in sorted(rest, reverse=True):
        k = rest[w]
        if k == 0:
            continue
        if k < 0 or not is_dominant(w):
            raise NotACharacterError(f"leading weight {w} has coefficient {k}")
        found[canonical(w)] = k
        for v, mult in _sp_character(canonical(w), n):
            rest[v] -= k * mult
    leftover = {w: k for w, k in rest.items() if k}
    if leftover:
        w = max(leftover)
        raise NotACharacterError(f"leading weight {w} has coefficient {leftover[w]}")
    return Decomposition(n, found)


def _check_tensor_scale(m: int, cap: int | None) -> None:
    limit = tensor_cap() if cap is None else cap
    if m > limit:
        raise ValueError(
            f"rank m={m} exceeds the tensor oracle cap {limit} (set SYMPIERI_ORACLE_CAP to raise it)"
        )


def tensor_decompose(d: Sequence[int], e: Sequence[int], m: int, cap: int | None = None) -> Decomposition:
    return tensor_decompose_many([d, e], m, cap=cap)


def tensor_decompose_many(ds: Sequence[Sequence[int]], m: int, cap: int | None = None) -> Decomposition:
    """Decompose ``tau^{D_1} ⊗ ... ⊗ tau^{D_k}`` of Sp(2m) by character convolution."""
    _check_tensor_scale(m, cap)
    acc: Character = {(0,) * m: 1}
    for d in ds:
        acc = multiply(acc, sp_character(d, m))
    return decompose(acc, m)


def restrict_decompose(e: Sequence[int], n: int, parts: Sequence[int]) -> dict[tuple[Diagram, ...], int]:
    """Restrict ``tau^E_{2n}`` to ``Sp(2 n_1) x ... x Sp(2 n_k)``.

    Returns ``{(D_1, ..., D_k): multiplicity}``.
    """
    parts = [int(p) for p in parts]
    if any(p < 1 for p in parts) or sum(parts) != n:
        raise ValueError(f"parts {parts} must be positive and sum to n={n}")
    bounds = [0]
    for p in parts:
        bounds.append(bounds[-1] + p)
    rest: Counter[Weight] = Counter(sp_character(e, n))
    found: dict[tuple[Diagram, ...], int] = {}

    def blocks(w: Weight) -> list[Weight]:
        return [w[bounds[i]:bounds[i + 1]] for i in range(len(parts))]

    # Concatenated lexicographic order refines the product dominance order.
    for w in sorted(rest, reverse=True):
        k = rest[w]
        if k == 0:
            continue
        bs = blocks(w)
        if k < 0 or not all(is_dominant(b) for b in bs):
            raise NotACharacterError(f"leading weight {w} has coefficient {k}")
        labels = tuple(canonical(b) for b in bs)
        found[labels] = k
        factors = [_sp_character(lab, p) for lab, p in zip(labels, parts)]
        for combo in product(*factors):
            v = tuple(x for wt, _ in combo for x in wt)
            rest[v] -= k * prod(c for _, c in combo)
    if any(rest.values()):
        raise NotACharacterError("restriction left a nonzero remainder")
    return found


def exterior_joint_character(n: int, m: int, cap: int | None = None) -> JointCharacter:
    """Joint Sp(2n) x Sp(2m) character of the exterior algebra on ``C^{2n} ⊗ C^m``.

    A wedge of basis vectors ``f ⊗ u_j`` has Sp(2n)-weight the sum of the
    ``±eps_i`` of the ``f`` factors; its Sp(2m)-weight has ``j``-th coordinate
    equal to the number of factors with index ``j`` minus ``n``.
    """
    limit = exterior_cap() if cap is None else cap
    if 2 * n * m > limit:
        raise ValueError(f"2nm={2 * n * m} exceeds the exterior cap {limit}")
    acc: Counter[tuple[Weight, Weight]] = Counter({((0,) * n, (-n,) * m): 1})
    for i in range(n):
        for sign in (1, -1):
            for j in range(m):
                nxt: Counter[tuple[Weight, Weight]] = Counter()
                for (a, b), c in acc.items():
                    nxt[(a, b)] += c
                    a2 = a[:i] + (a[i] + sign,) + a[i + 1:]
                    b2 = b[:j] + (b[j] + 1,) + b[j + 1:]
                    nxt[(a2, b2)] += c
                acc = nxt
    return dict(acc)


def duality_character(n: int, m: int) -> JointCharacter:
    """Sum over the ``n x m`` box of ``char(D) ⊠ char(iota(D))``."""
    acc: Counter[tuple[Weight, Weight]] = Counter()
    for d in diagrams_in_box(n, m):
        left = sp_character(d, n)
        right = sp_character(iota(d, n, m), m)
        for a, ca in left.items():
            for b, cb in right.items():
                acc[(a, b)] += ca * cb
    return dict(acc)
