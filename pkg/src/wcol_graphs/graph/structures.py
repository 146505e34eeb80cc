"""Layerings, tree partitions, tree decompositions and path decompositions."""

from __future__ import annotations

from collections.abc import Collection, Iterable, Sequence
from dataclasses import dataclass
from enum import Enum

from wcol_graphs.errors import NotConnected
from wcol_graphs.graph.graph import Graph, distances_from, is_connected


def _freeze(sets: Iterable[Collection[int]]) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(s) for s in sets)


@dataclass(frozen=True)
class Layering:
    """An ordered partition (P_0, ..., P_l) of a vertex scope."""

    parts: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, parts: Iterable[Collection[int]]) -> Layering:
        return cls(_freeze(parts))

    @property
    def scope(self) -> frozenset[int]:
        return frozenset().union(*self.parts)

    def layer_of(self) -> dict[int, int]:
        return {v: i for i, part in enumerate(self.parts) for v in part}

    def to_json(self) -> list[list[int]]:
        return [sorted(part) for part in self.parts]


@dataclass(frozen=True)
class TreePartition:
    """A partition of a vertex scope indexed by the nodes of a tree."""

    tree: Graph
    parts: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, tree: Graph, parts: Iterable[Collection[int]]) -> TreePartition:
        return cls(tree, _freeze(parts))

    @property
    def scope(self) -> frozenset[int]:
        return frozenset().union(*self.parts)


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags W_x indexed by the nodes x of a tree."""

    tree: Graph
    bags: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, tree: Graph, bags: Iterable[Collection[int]]) -> TreeDecomposition:
        return cls(tree, _freeze(bags))

    @classmethod
    def trivial(cls, g: Graph) -> TreeDecomposition:
        """One bag holding every vertex."""
        return cls(Graph(1), (frozenset(g.vertices),))

    @property
    def width(self) -> int:
        return max((len(bag) for bag in self.bags), default=0) - 1

    def union_of(self, nodes: Iterable[int]) -> frozenset[int]:
        return frozenset().union(*(self.bags[x] for x in nodes))

    def restricted(self, vertices: Collection[int], old_to_new: dict[int, int] | None = None) -> TreeDecomposition:
        """Decomposition of an induced subgraph: every bag intersected with `vertices` (and optionally renamed)."""
        keep = set(vertices)
        if old_to_new is None:
            return TreeDecomposition(self.tree, tuple(bag & keep for bag in self.bags))
        bags = tuple(frozenset(old_to_new[v] for v in bag if v in keep) for bag in self.bags)
        return TreeDecomposition(self.tree, bags)

    def to_json(self) -> dict:
        return {"tree_edges": sorted(self.tree.edges), "bags": [sorted(bag) for bag in self.bags]}

    @classmethod
    def from_json(cls, data: dict) -> TreeDecomposition:
        bags = data["bags"]
        return cls.of(Graph.from_edges(len(bags), data["tree_edges"]), bags)


@dataclass(frozen=True)
class PathDecomposition:
    """A sequence of bags (W_0, ..., W_l); the underlying tree is the path 0-1-...-l."""

    bags: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, bags: Iterable[Collection[int]]) -> PathDecomposition:
        return cls(_freeze(bags))

    @property
    def width(self) -> int:
        return max((len(bag) for bag in self.bags), default=0) - 1

    def as_tree_decomposition(self) -> TreeDecomposition:
        path = Graph.from_edges(len(self.bags), ((i, i + 1) for i in range(len(self.bags) - 1)))
        return TreeDecomposition(path, self.bags)

    def without_empty_bags(self) -> PathDecomposition:
        return PathDecomposition(tuple(bag for bag in self.bags if bag))

    def to_json(self) -> list[list[int]]:
        return [sorted(bag) for bag in self.bags]


class StructureKind(Enum):
    """The structure types understood by validate_structure."""

    LAYERING = "layering"
    TREE_PARTITION = "tree-partition"
    TREE_DECOMPOSITION = "tree-decomposition"
    PATH_DECOMPOSITION = "path-decomposition"

    @classmethod
    def infer_type(cls, structure: object) -> StructureKind:
        """Infer the kind from a structure instance.

        Args:
            structure (object): A Layering, TreePartition, TreeDecomposition or PathDecomposition.

        Returns:
            StructureKind: The matching kind.
        """
        kinds = {
            Layering: cls.LAYERING,
            TreePartition: cls.TREE_PARTITION,
            TreeDecomposition: cls.TREE_DECOMPOSITION,
            PathDecomposition: cls.PATH_DECOMPOSITION,
        }
        for structure_type, kind in kinds.items():
            if isinstance(structure, structure_type):
                return kind
        raise ValueError(f"Invalid structure type : {type(structure).__name__}, chose from {[k.value for k in cls]}")


def bfs_layering(g: Graph, u: int) -> Layering:
    """Distance layering of a connected graph from u, with P_0 = {u}."""
    g.check_vertex(u)
    if not is_connected(g):
        raise NotConnected("bfs_layering needs a connected graph")
    distance = distances_from(g, u)
    parts: list[set[int]] = [set() for _ in range(max(distance.values()) + 1)]
    for v, d in distance.items():
        parts[d].add(v)
    return Layering.of(parts)


def path_decomposition_of_ordering(g: Graph, sequence: Sequence[int]) -> PathDecomposition:
    """Path decomposition read off a linear vertex ordering.

    Bag i holds v_i and every earlier vertex that still has a neighbour at position ≥ i, so the width equals the
    vertex separation number of the ordering.
    """
    position = {v: i for i, v in enumerate(sequence)}
    last_neighbour = {v: max((position[w] for w in g.neighbors(v)), default=-1) for v in sequence}
    bags = []
    for i, v in enumerate(sequence):
        bags.append({v} | {w for w in sequence[:i] if last_neighbour[w] >= i})
    return PathDecomposition.of(bags)
