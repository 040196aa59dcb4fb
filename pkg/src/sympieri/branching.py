"""Branching from Sp(2n+2) to Sp(2n) x Sp(2) through double interlacing."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from . import kostant, sl2
from .diagrams import Diagram, canonical, depth, pad, sort_diagrams


def _padded_pair(g: Sequence[int], e: Sequence[int], n: int) -> tuple[Diagram, Diagram]:
    g, e = canonical(g), canonical(e)
    if n < 0:
        raise ValueError(f"rank must be nonnegative, got {n}")
    if depth(g) > n + 1:
        raise ValueError(f"G={g} has more than n+1={n + 1} rows")
    if depth(e) > n:
        raise ValueError(f"E={e} has more than n={n} rows")
    return pad(g, n + 2), pad(e, n)


def doubly_interlaces(e: Sequence[int], g: Sequence[int], n: int) -> bool:
    """``g_i >= e_i >= g_{i+2}`` for ``i = 1..n`` (with ``g_{n+2} = 0``)."""
    gp, ep = _padded_pair(g, e, n)
    return all(gp[i] >= ep[i] >= gp[i + 2] for i in range(n))


def rho_profile(g: Sequence[int], e: Sequence[int], n: int) -> tuple[int, ...]:
    """Differences ``x_i - y_i`` of the paired decreasing merge of ``G``, ``E`` and a zero."""
    if not doubly_interlaces(e, g, n):
        raise ValueError(f"E={canonical(e)} does not doubly interlace G={canonical(g)} (n={n})")
    gp, ep = _padded_pair(g, e, n)
    merged = sorted(gp[: n + 1] + ep + (0,), reverse=True)
    return tuple(merged[2 * i] - merged[2 * i + 1] for i in range(n + 1))


def hom_dim(g: Sequence[int], e: Sequence[int], n: int) -> int:
    """Dimension of ``Hom_{Sp(2n)}(tau^E, tau^G)``."""
    return prod(r + 1 for r in rho_profile(g, e, n))


def enumerate_down(g: Sequence[int], n: int) -> list[Diagram]:
    """All ``E`` with at most ``n`` rows doubly interlacing ``G``."""
    g = canonical(g)
    if depth(g) > n + 1:
        raise ValueError(f"G={g} has more than n+1={n + 1} rows")
    gp = pad(g, n + 2)
    out: list[Diagram] = []

    def rec(prefix: tuple[int, ...]) -> None:
        i = len(prefix)
        if i == n:
            out.append(canonical(prefix))
            return
        hi = gp[i] if i == 0 else min(gp[i], prefix[-1])
        for e_i in range(hi, gp[i + 2] - 1, -1):
            rec(prefix + (e_i,))

    rec(())
    return sort_diagrams(out)


def enumerate_up(e: Sequence[int], n: int, m: int) -> list[Diagram]:
    """All ``G`` with at most ``n + 1`` rows and ``m`` columns that ``E`` doubly interlaces."""
    e = canonical(e)
    if depth(e) > n:
        raise ValueError(f"E={e} has more than n={n} rows")
    ep = pad(e, n)
    out: list[Diagram] = []

    def rec(prefix: tuple[int, ...]) -> None:
        i = len(prefix)
        if i == n + 1:
            out.append(canonical(prefix))
            return
        lo = ep[i] if i < n else 0
        hi = m if i == 0 else prefix[-1]
        if i >= 2:
            hi = min(hi, ep[i - 2])
        for g_i in range(hi, lo - 1, -1):
            rec(prefix + (g_i,))

    rec(())
    return sort_diagrams(out)


@dataclass(frozen=True)
class BranchTerm:
    e: Diagram
    sl2: dict[int, int]

    @property
    def total_multiplicity(self) -> int:
        return sum(self.sl2.values())


def branch(g: Sequence[int], n: int, method: str = "cg") -> list[BranchTerm]:
    """Restrict ``tau^G_{2n+2}`` to ``Sp(2n) x Sp(2)``.

    ``method="cg"`` decomposes the tensor product of SL(2) strings given by the
    interlacing profile; ``method="kostant"`` uses the partition-function formula.
    Both give the same terms.
    """
    g = canonical(g)
    terms = []
    for e in enumerate_down(g, n):
        if method == "cg":
            content = sl2.cg_multi(rho_profile(g, e, n))
        elif method == "kostant":
            content = kostant.lepowsky_decomposition(g, e, n)
        else:
            raise ValueError(f"unknown branching method {method!r}")
        terms.append(BranchTerm(e, content))
    return terms
