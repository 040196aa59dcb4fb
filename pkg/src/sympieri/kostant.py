"""Kostant partition function for the generators ``v_i ± v_{n+1}`` and Lepowsky's
branching multiplicities.

The generator set for a vector of length ``n + 1`` is
``{v_1 ± v_{n+1}, ..., v_n ± v_{n+1}}``.  Coordinate ``i <= n`` fixes
``c(v_i + v_{n+1}) + c(v_i - v_{n+1}) = v_i``, so a solution is a choice of
split per coordinate whose signed contributions to the last coordinate sum to
``v_{n+1}``.  A split of ``v_i`` contributes one of ``v_i, v_i - 2, ..., -v_i``.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .diagrams import Diagram


def sigma_generators(n: int) -> list[tuple[int, ...]]:
    """The ``2n`` generators ``v_i + v_{n+1}``, ``v_i - v_{n+1}`` as integer vectors."""
    if n < 1:
        raise ValueError("need n >= 1")
    gens = []
    for i in range(n):
        for sign in (1, -1):
            v = [0] * (n + 1)
            v[i] = 1
            v[n] = sign
            gens.append(tuple(v))
    return gens


def kostant_partition(v: Sequence[int]) -> int:
    """Number of ways to write ``v`` as a nonnegative integer combination of the generators."""
    v = [int(x) for x in v]
    if len(v) < 2:
        raise ValueError(f"vector must have length >= 2, got {len(v)}")
    *head, target = v
    if any(x < 0 for x in head):
        return 0
    if (target - sum(head)) % 2:
        return 0
    if abs(target) > sum(head):
        return 0
    # DP over the partial signed sum of the last coordinate.
    ways: Counter[int] = Counter({0: 1})
    for x in head:
        if x == 0:
            continue
        nxt: Counter[int] = Counter()
        for partial, count in ways.items():
            for step in range(-x, x + 1, 2):
                nxt[partial + step] += count
        ways = nxt
    return ways.get(target, 0)


def lepowsky_from_profile(rho: Sequence[int], ell: int) -> int:
    """Multiplicity of the SL(2) factor ``ell`` attached to a given interlacing profile."""
    if ell < 0:
        raise ValueError(f"ell must be nonnegative, got {ell}")
    rho = list(rho)
    if len(rho) < 2:
        # Rank-zero branching has no generators: only the last coordinate survives.
        (r,) = rho
        return int(ell == r)
    head, last = rho[:-1], rho[-1]
    return kostant_partition(head + [last - ell]) - kostant_partition(head + [last + ell + 2])


def lepowsky_mult(g: Sequence[int], e: Sequence[int], ell: int, n: int) -> int:
    """Multiplicity of ``tau^E_{2n} ⊗ tau^(ell)_2`` inside ``tau^G_{2n+2}``.

    Raises ValueError when ``E`` does not doubly interlace ``G``.
    """
    from .branching import rho_profile

    return lepowsky_from_profile(rho_profile(g, e, n), ell)


def lepowsky_decomposition(g: Diagram, e: Diagram, n: int) -> dict[int, int]:
    """All nonzero ``{ell: multiplicity}`` for the pair, via the partition function."""
    from .branching import rho_profile

    rho = rho_profile(g, e, n)
    top = sum(rho)
    out = {}
    for ell in range(top, -1, -1):
        mult = lepowsky_from_profile(rho, ell)
        if mult:
            out[ell] = mult
    return out
