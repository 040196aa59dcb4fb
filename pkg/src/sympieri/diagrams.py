"""Young diagram arithmetic.

Diagrams are plain tuples of positive integers in weakly decreasing order
(the empty diagram is ``()``).  Functions that take a bounding box use the
convention ``(n, m)``: at most ``n`` rows and at most ``m`` columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

Diagram = Tuple[int, ...]


def canonical(rows: Iterable[int]) -> Diagram:
    """Validate ``rows`` and strip trailing zeros.

    Raises:
        ValueError: If an entry is negative or the rows increase somewhere.
    """
    parts = tuple(int(r) for r in rows)
    for r in parts:
        if r < 0:
            raise ValueError(f"negative row length in {parts}")
    for prev, cur in zip(parts, parts[1:]):
        if cur > prev:
            raise ValueError(f"rows must be weakly decreasing: {parts}")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def parse_diagram(text: str) -> Diagram:
    """Parse ``"5,2,2,1"``; ``"0"`` or ``""`` is the empty diagram."""
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    text = text.strip("()")
    try:
        rows = [int(chunk) for chunk in text.split(",") if chunk.strip()]
    except ValueError as exc:
        raise ValueError(f"invalid diagram: {text!r}") from exc
    return canonical(rows)


def format_diagram(d: Sequence[int]) -> str:
    d = canonical(d)
    return ",".join(str(r) for r in d) if d else "0"


def pad(d: Sequence[int], length: int) -> Diagram:
    """Zero-pad ``d`` to exactly ``length`` rows."""
    d = tuple(d)
    if len(canonical(d)) > length:
        raise ValueError(f"{d} has more than {length} nonzero rows")
    d = d[:length]
    return d + (0,) * (length - len(d))


def depth(d: Sequence[int]) -> int:
    return sum(1 for r in d if r > 0)


def size(d: Sequence[int]) -> int:
    return sum(d)


def width(d: Sequence[int]) -> int:
    return d[0] if d else 0


def column(r: int) -> Diagram:
    """The single-column diagram ``1^r``."""
    return (1,) * r


def conjugate(d: Sequence[int]) -> Diagram:
    d = canonical(d)
    return tuple(sum(1 for row in d if row >= i) for i in range(1, width(d) + 1))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Row-wise containment ``inner ⊆ outer``."""
    outer, inner = tuple(outer), tuple(inner)
    if depth(inner) > depth(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


@dataclass(frozen=True)
class RectBound:
    """At most ``n`` rows and at most ``m`` columns."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ValueError(f"box dimensions must be positive, got {self.n}x{self.m}")

    def __contains__(self, d: Sequence[int]) -> bool:
        return fits(d, self.n, self.m)

    def diagrams(self) -> list[Diagram]:
        return diagrams_in_box(self.n, self.m)

    def transpose(self) -> "RectBound":
        return RectBound(self.m, self.n)


def fits(d: Sequence[int], n: int, m: int) -> bool:
    d = canonical(d)
    return depth(d) <= n and width(d) <= m


def _require_fits(d: Diagram, n: int, m: int, name: str) -> None:
    if not fits(d, n, m):
        raise ValueError(f"{name}={d} does not fit in {n} rows x {m} columns")


def r_involution(e: Sequence[int], n: int, m: int) -> Diagram:
    """Complement of ``e`` in the ``m``-row by ``n``-column box, rotated 180 degrees."""
    e = canonical(e)
    _require_fits(e, m, n, "E")
    padded = pad(e, m)
    return canonical(n - a for a in reversed(padded))


def iota(d: Sequence[int], n: int, m: int) -> Diagram:
    """The bijection from diagrams in an n x m box to diagrams in an m x n box."""
    d = canonical(d)
    _require_fits(d, n, m, "D")
    return r_involution(conjugate(d), n, m)


def iota_closed_form(d: Sequence[int], n: int, m: int) -> Diagram:
    """``iota`` by run lengths: ``m - d1`` copies of ``n``, ``d1 - d2`` of ``n - 1``, ..."""
    d = canonical(d)
    _require_fits(d, n, m, "D")
    rows = pad(d, n)
    out = [n] * (m - rows[0])
    for i in range(n - 1):
        out += [n - 1 - i] * (rows[i] - rows[i + 1])
    return canonical(out)


def j_inverse(e: Sequence[int], n: int, m: int) -> Diagram:
    """Inverse of ``iota(., n, m)``; takes a diagram in the m x n box."""
    e = canonical(e)
    _require_fits(e, m, n, "E")
    return conjugate(r_involution(e, n, m))


def j_closed_form(e: Sequence[int], n: int, m: int) -> Diagram:
    e = canonical(e)
    _require_fits(e, m, n, "E")
    rows = pad(e, m)
    out = [m] * (n - rows[0])
    for i in range(m - 1):
        out += [m - 1 - i] * (rows[i] - rows[i + 1])
    return canonical(out)


@dataclass(frozen=True)
class SkewShape:
    outer: Diagram
    inner: Diagram

    def __post_init__(self) -> None:
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return size(self.outer) - size(self.inner)

    def row_lengths(self) -> Diagram:
        inner = pad(self.inner, len(self.outer))
        return tuple(o - i for o, i in zip(self.outer, inner))


def skew(d: Sequence[int], e: Sequence[int]) -> SkewShape:
    return SkewShape(canonical(d), canonical(e))


def is_vertical_strip(s: SkewShape) -> bool:
    return all(x <= 1 for x in s.row_lengths())


def partitions(total: int, max_rows: int | None = None, max_part: int | None = None) -> Iterator[Diagram]:
    """All diagrams with ``total`` boxes, optionally bounded, in descending order."""
    if max_part is None:
        max_part = total
    if max_rows is None:
        max_rows = total

    def rec(rem: int, cap: int, rows_left: int) -> Iterator[Diagram]:
        if rem == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in rec(rem - first, first, rows_left - 1):
                yield (first,) + rest

    yield from rec(total, max_part, max_rows)


def diagrams_in_box(n: int, m: int) -> list[Diagram]:
    """Every diagram with at most ``n`` rows and ``m`` columns, descending."""
    out: list[Diagram] = []

    def rec(prefix: Diagram, cap: int) -> None:
        out.append(canonical(prefix))
        if len(prefix) == n:
            return
        for row in range(cap, 0, -1):
            rec(prefix + (row,), row)

    rec((), m)
    return sort_diagrams(out)


def diagrams_up_to(max_size: int, max_rows: int | None = None) -> list[Diagram]:
    out: list[Diagram] = []
    for k in range(max_size + 1):
        out.extend(partitions(k, max_rows=max_rows))
    return out


def sub_diagrams(d: Sequence[int]) -> Iterator[Diagram]:
    """Every diagram contained in ``d``."""
    d = canonical(d)

    def rec(i: int, cap: int) -> Iterator[Diagram]:
        if i == len(d):
            yield ()
            return
        for row in range(min(cap, d[i]), -1, -1):
            if row == 0:
                yield ()
                continue
            for rest in rec(i + 1, row):
                yield (row,) + rest

    yield from rec(0, width(d))


def sort_diagrams(ds: Iterable[Sequence[int]]) -> list[Diagram]:
    """Deterministic order: lexicographic on padded rows, descending."""
    # Canonical rows are positive, so plain tuple order agrees with padded order.
    return sorted((canonical(d) for d in ds), reverse=True)
