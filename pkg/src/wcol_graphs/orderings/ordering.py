"""Orderings of a vertex scope and weak coloring certificates."""

from __future__ import annotations

from collections import Counter
from collections.abc import Collection, Iterable
from dataclasses import dataclass, field
from functools import cached_property

from wcol_graphs.errors import ScopeMismatch


@dataclass(frozen=True)
class Ordering:
    """A linear order σ of a vertex scope S; earlier means smaller."""

    sequence: tuple[int, ...]
    scope: frozenset[int] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "scope", frozenset(self.sequence))
        if len(self.scope) != len(self.sequence):
            repeated = min(v for v, count in Counter(self.sequence).items() if count > 1)
            raise ScopeMismatch(f"vertex {repeated} appears twice in the ordering")

    @classmethod
    def of(cls, sequence: Iterable[int]) -> Ordering:
        return cls(tuple(int(v) for v in sequence))

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.sequence)}

    def restricted(self, keep: Collection[int]) -> Ordering:
        """σ|_X: the induced order on scope ∩ X."""
        kept = set(keep)
        return Ordering(tuple(v for v in self.sequence if v in kept))

    def relabelled(self, old_to_new: dict[int, int]) -> Ordering:
        """The same order expressed in new vertex names; vertices without a new name are dropped."""
        return Ordering(tuple(old_to_new[v] for v in self.sequence if v in old_to_new))

    def __len__(self) -> int:
        return len(self.sequence)

    def to_text(self) -> str:
        return " ".join(str(v) for v in self.sequence)

    @classmethod
    def from_text(cls, text: str) -> Ordering:
        return cls.of(int(token) for token in text.split())


@dataclass(frozen=True)
class WcolCertificate:
    """wcol_r(G, S, σ) for one ordering, with a vertex attaining the maximum.

    Attributes:
        r (int): The radius.
        value (int): max over u of |WReach_r[G, S, σ, u]|.
        ordering (Ordering): σ.
        witness_vertex (int | None): Smallest vertex attaining the value; None for the null graph.
        witness_set (frozenset[int]): Its weak reachability set.
        exact (bool): True when an exhaustive search proved that no ordering of S does better.
        nodes (int): Search nodes spent, when the certificate comes from a search.
    """

    r: int
    value: int
    ordering: Ordering
    witness_vertex: int | None
    witness_set: frozenset[int]
    exact: bool = False
    nodes: int = 0

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "value": self.value,
            "exact": self.exact,
            "ordering": list(self.ordering.sequence),
            "witness_vertex": self.witness_vertex,
            "witness_set": sorted(self.witness_set),
        }
