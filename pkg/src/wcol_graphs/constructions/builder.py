"""Incremental graph assembly with explicit vertex maps, and the result types of the constructions."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

import networkx as nx

from wcol_graphs.constructions.recipe import BuildRecipe
from wcol_graphs.errors import BadParams, RootOutOfRange
from wcol_graphs.graph.graph import Edge, Graph, VertexMap, normalize_edge


@dataclass(frozen=True)
class RootedGraph:
    """A graph with a distinguished root vertex."""

    graph: Graph
    root: int

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise RootOutOfRange(f"root {self.root} is not a vertex of {self.graph!r}")


@dataclass(frozen=True)
class BuiltGraph:
    """Output of build_family.

    Attributes:
        graph (Graph): The graph, labelled breadth-first from its root (or from its first vertex).
        recipe (BuildRecipe): Family, parameters and predicted counts.
        root (int | None): The construction root, where the family has one.
        markers (dict[str, int]): Named vertices, such as the u and v ends of a gadget.
        halves (tuple[VertexMap, ...]): For a double tower, the maps from the tower into each of its two halves.
    """

    graph: Graph
    recipe: BuildRecipe
    root: int | None = None
    markers: dict[str, int] = field(default_factory=dict)
    halves: tuple[VertexMap, ...] = ()

    def rooted(self) -> RootedGraph:
        """The graph with its construction root, or vertex 0 when the family has none."""
        if self.graph.n == 0:
            raise BadParams(f"{self.recipe.family.value} built a null graph, which has no root")
        return RootedGraph(self.graph, 0 if self.root is None else self.root)

    def to_json(self) -> dict:
        sidecar = self.recipe.to_json()
        sidecar["n"], sidecar["m"] = self.graph.n, self.graph.m
        if self.root is not None:
            sidecar["root"] = self.root
        if self.markers:
            sidecar["markers"] = dict(self.markers)
        return sidecar


class GraphBuilder:
    """Collects vertices and edges; pieces are added with an optional gluing map onto existing vertices."""

    def __init__(self):
        self.n = 0
        self.edges: set[Edge] = set()

    def add_vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def add_edge(self, u: int, v: int) -> None:
        self.edges.add(normalize_edge(u, v))

    def add_graph(self, g: Graph, glue: Mapping[int, int] | None = None) -> VertexMap:
        """Add a copy of g, identifying every vertex in `glue` with the given existing vertex.

        Returns:
            VertexMap: Where each vertex of g ended up.
        """
        glue = glue or {}
        placed = {v: glue[v] if v in glue else self.add_vertex() for v in g.vertices}
        for u, v in g.edges:
            self.add_edge(placed[u], placed[v])
        return placed

    def build(self, root: int | None = 0) -> tuple[Graph, VertexMap]:
        """Relabel breadth-first from `root` (smaller neighbours first), then from every unreached vertex in order.

        Returns:
            tuple[Graph, VertexMap]: The graph and the map from builder vertices to final labels.
        """
        scratch = nx.Graph()
        scratch.add_nodes_from(range(self.n))
        scratch.add_edges_from(self.edges)
        order: list[int] = []
        seen: set[int] = set()
        starts = ([root] if root is not None and self.n else []) + list(range(self.n))
        for start in starts:
            if start in seen:
                continue
            reached = [start] + [v for _, v in nx.bfs_edges(scratch, start, sort_neighbors=sorted)]
            seen.update(reached)
            order.extend(reached)
        relabel = {old: new for new, old in enumerate(order)}
        return Graph.from_edges(self.n, ((relabel[u], relabel[v]) for u, v in self.edges)), relabel


def compose(first: VertexMap, then: VertexMap) -> VertexMap:
    """The map v -> then[first[v]]."""
    return {v: then[w] for v, w in first.items()}
