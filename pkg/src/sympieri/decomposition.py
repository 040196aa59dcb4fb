"""Multisets of irreducible Sp(2m) labels and their JSON form."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

from .diagrams import Diagram, canonical, depth, format_diagram, sort_diagrams


@dataclass
class Decomposition:
    """``{diagram: multiplicity}`` for representations of Sp(2 * rank)."""

    rank: int
    terms: dict[Diagram, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: Counter[Diagram] = Counter()
        for d, mult in self.terms.items():
            d = canonical(d)
            if depth(d) > self.rank:
                raise ValueError(f"{d} has more than {self.rank} rows")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {d}")
            clean[d] += mult
        self.terms = {d: clean[d] for d in sort_diagrams(clean) if clean[d]}

    @classmethod
    def from_pairs(cls, rank: int, pairs: Iterable[tuple[Sequence[int], int]]) -> "Decomposition":
        acc: Counter[Diagram] = Counter()
        for d, mult in pairs:
            acc[canonical(d)] += mult
        return cls(rank, dict(acc))

    @property
    def total_multiplicity(self) -> int:
        return sum(self.terms.values())

    def __getitem__(self, d: Sequence[int]) -> int:
        return self.terms.get(canonical(d), 0)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def to_json(self, total_dimension: int | None = None) -> dict[str, Any]:
        out: dict[str, Any] = {
            "group": "Sp",
            "rank": self.rank,
            "summands": [{"diagram": list(d), "multiplicity": k} for d, k in self.terms.items()],
            "total_multiplicity": self.total_multiplicity,
        }
        if total_dimension is not None:
            out["total_dimension"] = total_dimension
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "Decomposition":
        if data.get("group") != "Sp":
            raise ValueError(f"unsupported group {data.get('group')!r}")
        pairs = [(tuple(s["diagram"]), int(s["multiplicity"])) for s in data["summands"]]
        dec = cls.from_pairs(int(data["rank"]), pairs)
        if dec.total_multiplicity != data.get("total_multiplicity", dec.total_multiplicity):
            raise ValueError("total_multiplicity does not match summands")
        return dec

    def table(self) -> str:
        lines = [f"{k} x ({format_diagram(d)})" for d, k in self.terms.items()]
        lines.append(f"total multiplicity: {self.total_multiplicity}")
        return "\n".join(lines)
