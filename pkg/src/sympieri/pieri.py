"""Skew Pieri rule for Sp(2m): ``tau^D ⊗ omega_r`` in every range.

The tensor product is computed through skew duality.  With ``n >= d_1``,
``E0 = j_{n,m}(D)`` has at most ``n`` rows; each ``G`` in the ``(n+1) x m``
box that ``E0`` doubly interlaces contributes ``tau^{iota_{n+1,m}(G)}`` with the
Lepowsky multiplicity of ``tau^{E0} ⊗ tau^{(m-r)}`` inside ``tau^G``.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .branching import enumerate_up
from .decomposition import Decomposition
from .diagrams import Diagram, canonical, depth, fits, iota, j_inverse, width
from .kostant import lepowsky_mult


def default_n(d: Sequence[int]) -> int:
    return max(width(canonical(d)), 1)


def skew_pieri(d: Sequence[int], r: int, m: int, n: int | None = None) -> Decomposition:
    d = canonical(d)
    if depth(d) > m:
        raise ValueError(f"D={d} has more than m={m} rows")
    if not 1 <= r <= m:
        raise ValueError(f"r must satisfy 1 <= r <= m, got r={r}, m={m}")
    if n is None:
        n = default_n(d)
    if n < max(width(d), 1):
        raise ValueError(f"n={n} is smaller than the first row d1={width(d)}")
    e0 = j_inverse(d, n, m)
    acc: Counter[Diagram] = Counter()
    for g in enumerate_up(e0, n, m):
        mult = lepowsky_mult(g, e0, m - r, n)
        if mult > 0:
            acc[iota(g, n + 1, m)] += mult
    return Decomposition(m, dict(acc))


def tensor_fundamentals(d: Sequence[int], rs: Sequence[int], m: int) -> Decomposition:
    """``tau^D ⊗ omega_{r_1} ⊗ ... ⊗ omega_{r_k}``; ``r = 0`` is the trivial factor."""
    current = Decomposition(m, {canonical(d): 1})
    for r in rs:
        if not 0 <= r <= m:
            raise ValueError(f"fundamental index must lie in [0, {m}], got {r}")
        if r == 0:
            continue
        acc: Counter[Diagram] = Counter()
        for f, mult in current:
            for g, k in skew_pieri(f, r, m):
                acc[g] += mult * k
        current = Decomposition(m, dict(acc))
    return current


def multi_fundamental_mult(
    d: Sequence[int], js: Sequence[int], e: Sequence[int], n: int, m: int
) -> int:
    """Multiplicity of ``tau^{iota_{n+k,m}(E)}`` in ``tau^{iota_{n,m}(D)} ⊗ omega_{m-j_1} ⊗ ... ⊗ omega_{m-j_k}``.

    By duality this equals the multiplicity of ``tau^D ⊗ tau^{(j_1)} ⊗ ... ⊗ tau^{(j_k)}``
    in ``tau^E`` restricted to ``Sp(2n) x Sp(2)^k``.
    """
    d, e = canonical(d), canonical(e)
    k = len(js)
    if not fits(d, n, m):
        raise ValueError(f"D={d} does not fit in {n} rows x {m} columns")
    if not fits(e, n + k, m):
        raise ValueError(f"E={e} does not fit in {n + k} rows x {m} columns")
    for j in js:
        if not 0 <= j <= m:
            raise ValueError(f"each j must lie in [0, {m}], got {j}")
    product = tensor_fundamentals(iota(d, n, m), [m - j for j in js], m)
    return product[iota(e, n + k, m)]
