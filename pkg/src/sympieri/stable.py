"""Tensor products of Sp(2m) representations in the stable range via
Littlewood-Richardson coefficients, and the vertical-strip Pieri rule."""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

from .decomposition import Decomposition
from .diagrams import Diagram, canonical, contains, depth, pad, size, sub_diagrams
from .lr import lr_product, skew_pairs


def stable_tensor(d: Sequence[int], e: Sequence[int], m: int) -> Decomposition:
    """Decompose ``tau^D ⊗ tau^E`` for Sp(2m) when ``depth(D) + depth(E) <= m``.

    The multiplicity of ``F`` is the sum over ``G1, G2, G3`` of
    ``c^F_{G1,G2} c^D_{G1,G3} c^E_{G2,G3}``.
    """
    d, e = canonical(d), canonical(e)
    if depth(d) + depth(e) > m:
        raise ValueError(
            f"outside the stable range: depth(D)+depth(E)={depth(d) + depth(e)} > m={m}"
        )
    by_g3_d: dict[Diagram, list[tuple[Diagram, int]]] = {}
    for g1, g3, c in skew_pairs(d):
        by_g3_d.setdefault(g3, []).append((g1, c))
    acc: Counter[Diagram] = Counter()
    for g2, g3, c_e in skew_pairs(e):
        for g1, c_d in by_g3_d.get(g3, ()):
            for f, c_f in lr_product(g1, g2, max_rows=m).items():
                acc[f] += c_f * c_d * c_e
    return Decomposition(m, dict(acc))


def _vertical_additions(shape: Diagram, k: int, max_rows: int) -> Iterator[Diagram]:
    """Shapes ``F ⊇ shape`` with ``F/shape`` a vertical strip of ``k`` boxes and at most ``max_rows`` rows."""
    rows = max(len(shape), max_rows)
    base = pad(shape, rows)

    def rec(i: int, left: int, prefix: tuple[int, ...]) -> Iterator[Diagram]:
        if left == 0:
            yield canonical(prefix + base[i:])
            return
        if i == rows:
            return
        for add in (1, 0):
            if add > left:
                continue
            row = base[i] + add
            if i and row > prefix[-1]:
                continue
            yield from rec(i + 1, left - add, prefix + (row,))

    for f in rec(0, k, ()):
        if depth(f) <= max_rows:
            yield f


def _vertical_removals(d: Diagram) -> Iterator[Diagram]:
    """Every ``E ⊆ D`` with ``D/E`` a vertical strip."""
    for e in sub_diagrams(d):
        ep = pad(e, len(d))
        if all(x - y <= 1 for x, y in zip(d, ep)):
            yield e


def pieri_vertical_strip(d: Sequence[int], r: int, m: int) -> Decomposition:
    """Decompose ``tau^D ⊗ omega_r`` by counting intermediate diagrams ``E``.

    ``F`` occurs once for every ``E`` contained in both ``D`` and ``F`` with
    ``D/E`` and ``F/E`` vertical strips of total size ``r``.  Valid when
    ``r + depth(D) <= m + 1``.
    """
    d = canonical(d)
    if not 1 <= r <= m:
        raise ValueError(f"r must satisfy 1 <= r <= m, got r={r}, m={m}")
    if depth(d) > m:
        raise ValueError(f"D={d} has more than m={m} rows")
    if r + depth(d) > m + 1:
        raise ValueError(f"outside the semistable range: r+depth(D)={r + depth(d)} > m+1={m + 1}")
    acc: Counter[Diagram] = Counter()
    for e in _vertical_removals(d):
        removed = size(d) - size(e)
        if removed > r:
            continue
        for f in _vertical_additions(e, r - removed, m):
            if contains(f, e):
                acc[f] += 1
    return Decomposition(m, dict(acc))
