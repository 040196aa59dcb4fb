"""Littlewood-Richardson coefficients.

``lr_coeff`` counts LR skew tableaux directly; ``lr_product`` expands a product
of two Schur functions by adding horizontal strips.  The two routes are
independent and are checked against each other in the tests.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator, Sequence

from .diagrams import Diagram, canonical, contains, pad, partitions, size, sub_diagrams


def lr_coeff(f: Sequence[int], d: Sequence[int], e: Sequence[int]) -> int:
    """Multiplicity of ``F`` in the product of ``D`` and ``E``."""
    return _lr_coeff(canonical(f), canonical(d), canonical(e))


@lru_cache(maxsize=None)
def _lr_coeff(f: Diagram, d: Diagram, e: Diagram) -> int:
    if size(f) != size(d) + size(e) or not contains(f, d) or not contains(f, e):
        return 0
    if not e:
        return 1
    inner = pad(d, len(f))
    # Reverse reading order: rows top to bottom, each row right to left.
    cells = [(r, c) for r in range(len(f)) for c in range(f[r] - 1, inner[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(e) + 1)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        hi = filling.get((r, c + 1), len(e))
        lo = filling.get((r - 1, c), 0) + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= e[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            total += place(k + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return total

    return place(0)


def _horizontal_strips(shape: Diagram, k: int, max_rows: int | None) -> Iterator[Diagram]:
    """Diagrams obtained from ``shape`` by adding ``k`` boxes, no two in one column."""
    rows = len(shape) + 1 if max_rows is None else min(len(shape) + 1, max_rows)
    base = pad(shape, rows) if rows >= len(shape) else shape

    def rec(i: int, left: int, prefix: tuple[int, ...]) -> Iterator[Diagram]:
        if i == rows:
            if left == 0:
                yield canonical(prefix)
            return
        cap = left if i == 0 else min(left, base[i - 1] - base[i])
        for add in range(cap, -1, -1):
            yield from rec(i + 1, left - add, prefix + (base[i] + add,))

    if rows < len(shape):
        return
    yield from rec(0, k, ())


def _is_lattice(word: list[int]) -> bool:
    counts: Counter[int] = Counter()
    for v in word:
        counts[v] += 1
        if v > 1 and counts[v] > counts[v - 1]:
            return False
    return True


def lr_product(d: Sequence[int], e: Sequence[int], max_rows: int | None = None) -> dict[Diagram, int]:
    """``{F: c^F_{D,E}}`` for all ``F`` (optionally only those with at most ``max_rows`` rows)."""
    d, e = canonical(d), canonical(e)
    return dict(_lr_product(d, e, max_rows))


@lru_cache(maxsize=None)
def _lr_product(d: Diagram, e: Diagram, max_rows: int | None) -> tuple[tuple[Diagram, int], ...]:
    if max_rows is not None and len(d) > max_rows:
        return ()
    # Each state is (shape, labels per row as tuples read left to right).
    states: list[tuple[Diagram, tuple[tuple[int, ...], ...]]] = [(d, ())]
    for label, k in enumerate(e, start=1):
        nxt = []
        for shape, labels in states:
            for new in _horizontal_strips(shape, k, max_rows):
                old = pad(shape, len(new))
                rows = list(labels) + [()] * (len(new) - len(labels))
                rows = [rows[i] + (label,) * (new[i] - old[i]) for i in range(len(new))]
                nxt.append((new, tuple(rows)))
        states = nxt
    out: Counter[Diagram] = Counter()
    for shape, labels in states:
        word = [v for row in labels for v in reversed(row)]
        if _is_lattice(word):
            out[shape] += 1
    return tuple(sorted(out.items(), reverse=True))


def skew_pairs(d: Sequence[int]) -> list[tuple[Diagram, Diagram, int]]:
    """All ``(A, B, c^D_{A,B})`` with a nonzero coefficient."""
    d = canonical(d)
    return list(_skew_pairs(d))


@lru_cache(maxsize=None)
def _skew_pairs(d: Diagram) -> tuple[tuple[Diagram, Diagram, int], ...]:
    out = []
    for a in sub_diagrams(d):
        for b in partitions(size(d) - size(a)):
            c = _lr_coeff(d, a, b)
            if c:
                out.append((a, b, c))
    return tuple(out)
