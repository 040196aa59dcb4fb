"""Machine checks of skew duality and the tensor/branching reciprocity."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Iterable, Iterator, Sequence

from . import characters, kostant, sl2
from .branching import branch, doubly_interlaces, rho_profile
from .diagrams import Diagram, canonical, column, depth, diagrams_in_box, diagrams_up_to, fits, iota, width
from .pieri import skew_pieri
from .stable import pieri_vertical_strip, stable_tensor


@dataclass
class DualityReport:
    n: int
    m: int
    total_mass: int
    expected_mass: int
    discrepancies: list[tuple[Any, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.discrepancies and self.total_mass == self.expected_mass

    def to_json(self) -> dict[str, Any]:
        return {
            "check": "duality",
            "n": self.n,
            "m": self.m,
            "passed": self.passed,
            "total_mass": self.total_mass,
            "expected_mass": self.expected_mass,
            "discrepancies": [
                {"weight": [list(w[0]), list(w[1])], "exterior": a, "sum": b}
                for w, a, b in self.discrepancies
            ],
        }


def verify_duality(n: int, m: int, cap: int | None = None) -> DualityReport:
    ext = characters.exterior_joint_character(n, m, cap=cap)
    dual = characters.duality_character(n, m)
    bad = [(w, ext.get(w, 0), dual.get(w, 0)) for w in sorted(set(ext) | set(dual))
           if ext.get(w, 0) != dual.get(w, 0)]
    return DualityReport(n, m, characters.mass(ext), 2 ** (2 * n * m), bad)


@dataclass(frozen=True)
class MainTheoremCheck:
    parts: tuple[int, ...]
    m: int
    ds: tuple[Diagram, ...]
    e: Diagram
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict[str, Any]:
        return {
            "parts": list(self.parts),
            "m": self.m,
            "diagrams": [list(d) for d in self.ds],
            "e": list(self.e),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
        }


def verify_main_theorem(
    parts: Sequence[int], m: int, ds: Sequence[Sequence[int]], e: Sequence[int], cap: int | None = None
) -> MainTheoremCheck:
    """Compare branching multiplicity of ``(D_1..D_k)`` in ``tau^E_{2n}`` with the
    multiplicity of ``tau^{iota(E)}`` in the tensor product of the ``iota(D_i)``."""
    parts = tuple(int(p) for p in parts)
    ds = tuple(canonical(d) for d in ds)
    e = canonical(e)
    n = sum(parts)
    if len(ds) != len(parts):
        raise ValueError(f"{len(parts)} parts but {len(ds)} diagrams")
    for d, p in zip(ds, parts):
        if not fits(d, p, m):
            raise ValueError(f"D={d} does not fit in {p} rows x {m} columns")
    if not fits(e, n, m):
        raise ValueError(f"E={e} does not fit in {n} rows x {m} columns")
    lhs = characters.restrict_decompose(e, n, parts).get(ds, 0)
    images = [iota(d, p, m) for d, p in zip(ds, parts)]
    rhs = characters.tensor_decompose_many(images, m, cap=cap)[iota(e, n, m)]
    return MainTheoremCheck(parts, m, ds, e, lhs, rhs)


def main_theorem_grid(parts: Sequence[int], m: int, cap: int | None = None) -> list[MainTheoremCheck]:
    """Every instance for the given parts: each ``D_i`` in its box, every ``E``."""
    parts = tuple(parts)
    n = sum(parts)
    boxes = [diagrams_in_box(p, m) for p in parts]
    return [
        verify_main_theorem(parts, m, ds, e, cap=cap)
        for ds in product(*boxes)
        for e in diagrams_in_box(n, m)
    ]


@dataclass
class IdentityResult:
    name: str
    instances: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass
class CrossReport:
    m: int
    results: list[IdentityResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict[str, Any]:
        return {
            "check": "cross",
            "m": self.m,
            "passed": self.passed,
            "identities": [
                {"name": r.name, "passed": r.passed, "instances": r.instances, "counterexample": r.counterexample}
                for r in self.results
            ],
        }


def _run(name: str, cases: Iterable[Any], check: Callable[[Any], str | None]) -> IdentityResult:
    res = IdentityResult(name)
    for case in cases:
        res.instances += 1
        problem = check(case)
        if problem is not None:
            res.counterexample = problem
            break
    return res


def interlacing_pairs(n: int, max_entry: int) -> Iterator[tuple[Diagram, Diagram]]:
    """All ``(G, E)`` with ``E`` doubly interlacing ``G``, entries at most ``max_entry``."""
    for g in diagrams_in_box(n + 1, max_entry):
        for e in diagrams_in_box(n, max_entry) if n else [()]:
            if doubly_interlaces(e, g, n):
                yield g, e


def verify_cross(m: int, depth_cap: int = 3, size_cap: int = 4, max_ell: int = 8) -> CrossReport:
    """Sweep the cross-module identities.

    ``depth_cap`` bounds the branching rank and the depth of ``D``; ``size_cap``
    bounds entries of interlacing pairs and ``|D|``.  Caps of zero give an
    empty (vacuously passing) sweep.
    """
    results = []

    def lepowsky_vs_cg(case: tuple[int, Diagram, Diagram]) -> str | None:
        n, g, e = case
        rho = rho_profile(g, e, n)
        for ell in range(max_ell + 1):
            a = kostant.lepowsky_mult(g, e, ell, n)
            b = sl2.cg_multiplicity(ell, rho)
            if a != b:
                return f"G={g} E={e} n={n} ell={ell}: kostant {a} != clebsch-gordan {b}"
        return None

    pairs = [(n, g, e) for n in range(1, depth_cap + 1) for g, e in interlacing_pairs(n, size_cap)]
    results.append(_run("lepowsky == clebsch-gordan", pairs, lepowsky_vs_cg))

    oracle_cap = characters.tensor_cap()

    def branch_vs_oracle(case: tuple[int, Diagram]) -> str | None:
        n, g = case
        rule = {(t.e, canonical((ell,))): k for t in branch(g, n) for ell, k in t.sl2.items()}
        oracle = characters.restrict_decompose(g, n + 1, [n, 1])
        if rule != oracle:
            return f"G={g} n={n}: branching rule {rule} != oracle {oracle}"
        return None

    cases = [(n, g) for n in range(1, min(depth_cap, oracle_cap - 1) + 1)
             for g in diagrams_up_to(size_cap, n + 1) if size_cap]
    results.append(_run("branching == character restriction", cases, branch_vs_oracle))

    sweep = [
        (d, r, mm)
        for mm in range(1, m + 1)
        for d in diagrams_up_to(size_cap, min(depth_cap, mm))
        if size_cap and depth_cap
        for r in range(1, mm + 1)
    ]

    def pieri_vs_strip(case: tuple[Diagram, int, int]) -> str | None:
        d, r, mm = case
        if r + depth(d) > mm + 1:
            return None
        a = skew_pieri(d, r, mm)
        if a != pieri_vertical_strip(d, r, mm):
            return f"D={d} r={r} m={mm}: skew pieri != vertical strip rule"
        if r + depth(d) <= mm and a != stable_tensor(d, column(r), mm):
            return f"D={d} r={r} m={mm}: skew pieri != stable range formula"
        return None

    results.append(_run("skew pieri == vertical strips == stable range", sweep, pieri_vs_strip))

    def pieri_n_invariance(case: tuple[Diagram, int, int]) -> str | None:
        d, r, mm = case
        n0 = max(width(d), 1)
        base = skew_pieri(d, r, mm, n0)
        for n in (n0 + 1, n0 + 2):
            if skew_pieri(d, r, mm, n) != base:
                return f"D={d} r={r} m={mm}: output changes at n={n}"
        return None

    results.append(_run("skew pieri independent of n", sweep, pieri_n_invariance))

    def pieri_vs_oracle(case: tuple[Diagram, int, int]) -> str | None:
        d, r, mm = case
        if mm > oracle_cap:
            return None
        a = skew_pieri(d, r, mm)
        b = characters.tensor_decompose(d, column(r), mm)
        if a != b:
            return f"D={d} r={r} m={mm}: skew pieri {a.terms} != oracle {b.terms}"
        return None

    results.append(_run("skew pieri == character oracle", sweep, pieri_vs_oracle))
    return CrossReport(m, results)
