"""Minor models, subgraph families and rich models, with their validators.

The validators only read the host graph and the claimed sets; they share no code with the searches that produce
models, so a search bug cannot hide behind its own checker.
"""

from __future__ import annotations

from collections.abc import Collection, Iterable, Sequence
from dataclasses import dataclass

import networkx as nx

from wcol_graphs.errors import InvalidModel
from wcol_graphs.graph.graph import Graph
from wcol_graphs.graph.validation import Violation


def _freeze(sets: Iterable[Collection[int]]) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(s) for s in sets)


@dataclass(frozen=True)
class Model:
    """A model (B_x | x ∈ V(H)) of a pattern H: branch set `branch[x]` for every pattern vertex x.

    Attributes:
        pattern (Graph): The pattern H.
        branch (tuple[frozenset[int], ...]): Host vertex sets, indexed by pattern vertex.
    """

    pattern: Graph
    branch: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, pattern: Graph, branch: Iterable[Collection[int]]) -> Model:
        return cls(pattern, _freeze(branch))

    @property
    def vertices(self) -> frozenset[int]:
        """Union of all branch sets."""
        return frozenset().union(*self.branch)

    def owner(self) -> dict[int, int]:
        """Map host vertex -> pattern vertex whose branch set contains it."""
        return {v: x for x, bag in enumerate(self.branch) for v in bag}

    def to_json(self) -> dict:
        return {"pattern_n": self.pattern.n, "branch": [sorted(bag) for bag in self.branch]}

    @classmethod
    def from_json(cls, data: dict, pattern: Graph) -> Model:
        if data["pattern_n"] != pattern.n:
            raise InvalidModel(f"model is for {data['pattern_n']} pattern vertices, pattern has {pattern.n}")
        return cls.of(pattern, data["branch"])


@dataclass(frozen=True)
class SubgraphFamily:
    """A finite family 𝓕 of connected subgraphs of a host, stored by vertex sets."""

    members: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, members: Iterable[Collection[int]]) -> SubgraphFamily:
        return cls(_freeze(members))

    @classmethod
    def singletons(cls, g: Graph) -> SubgraphFamily:
        """Every one-vertex subgraph; rich models for this family are exactly the models."""
        return cls.of([v] for v in g.vertices)

    def __len__(self) -> int:
        return len(self.members)

    def inside(self, vertices: Collection[int]) -> list[int]:
        """Indices of the members contained in `vertices` (the family restricted to an induced subgraph)."""
        keep = frozenset(vertices)
        return [i for i, member in enumerate(self.members) if member <= keep]

    def restricted(self, vertices: Collection[int], old_to_new: dict[int, int]) -> SubgraphFamily:
        """𝓕|_{G[X]} relabelled by `old_to_new`."""
        return SubgraphFamily.of([old_to_new[v] for v in self.members[i]] for i in self.inside(vertices))

    def to_json(self) -> list[list[int]]:
        return [sorted(member) for member in self.members]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> SubgraphFamily:
        return cls.of(data)


@dataclass(frozen=True)
class RichModel:
    """An 𝓕-rich model: `anchors[x]` is the index of a family member contained in branch set x."""

    model: Model
    anchors: tuple[int, ...]

    def to_json(self) -> dict:
        data = self.model.to_json()
        data["anchors"] = list(self.anchors)
        return data

    @classmethod
    def from_json(cls, data: dict, pattern: Graph) -> RichModel:
        return cls(Model.from_json(data, pattern), tuple(data["anchors"]))


def _is_connected_in(host: Graph, vertices: frozenset[int]) -> bool:
    return bool(vertices) and nx.is_connected(host.nx.subgraph(vertices))


def validate_model(host: Graph, model: Model) -> list[Violation]:
    """Check that the branch sets are nonempty, in range, pairwise disjoint, connected, and realise every edge."""
    violations: list[Violation] = []
    if len(model.branch) != model.pattern.n:
        return [Violation("one branch set per pattern vertex required", (len(model.branch), model.pattern.n))]
    seen: dict[int, int] = {}
    for x, bag in enumerate(model.branch):
        if not bag:
            violations.append(Violation("branch set is empty", (x,)))
            continue
        outside = sorted(v for v in bag if not 0 <= v < host.n)
        if outside:
            violations.append(Violation("branch vertex out of range", (x, outside[0])))
            continue
        for v in sorted(bag):
            if v in seen:
                violations.append(Violation("branch sets are not disjoint", (v, seen[v], x)))
            seen[v] = x
        if not _is_connected_in(host, bag):
            violations.append(Violation("branch set is not connected", (x, tuple(sorted(bag)))))
    if violations:
        return violations
    for x, y in sorted(model.pattern.edges):
        if not any(w in model.branch[y] for v in model.branch[x] for w in host.neighbors(v)):
            violations.append(Violation("pattern edge not realised", (x, y)))
    return violations


def validate_family(host: Graph, family: SubgraphFamily) -> list[Violation]:
    """Every member must be a nonempty connected vertex set of the host."""
    violations = []
    for i, member in enumerate(family.members):
        if not member:
            violations.append(Violation("member is empty", (i,)))
        elif any(not 0 <= v < host.n for v in member):
            violations.append(Violation("member vertex out of range", (i,)))
        elif not _is_connected_in(host, member):
            violations.append(Violation("member is not connected", (i, tuple(sorted(member)))))
    return violations


def validate_rich_model(host: Graph, rich: RichModel, family: SubgraphFamily) -> list[Violation]:
    """Model clauses plus: every branch set contains its anchored family member."""
    violations = validate_model(host, rich.model)
    if len(rich.anchors) != len(rich.model.branch):
        return violations + [Violation("one anchor per branch set required", (len(rich.anchors),))]
    for x, (bag, anchor) in enumerate(zip(rich.model.branch, rich.anchors)):
        if not 0 <= anchor < len(family):
            violations.append(Violation("anchor is not a family member", (x, anchor)))
        elif not family.members[anchor] <= bag:
            violations.append(Violation("anchored member not inside its branch set", (x, anchor)))
    return violations


def check_model(host: Graph, model: Model) -> None:
    """Raise InvalidModel with the first violated clause."""
    violations = validate_model(host, model)
    if violations:
        raise InvalidModel(str(violations[0]))
