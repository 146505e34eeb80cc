"""Immutable simple graphs on vertices 0..n-1 and the surgery operations used throughout the library.

Every transform that changes vertex labels returns an explicit old -> new vertex map, so that witnesses computed on
a transformed graph can be carried back to the original one.
"""

from __future__ import annotations

from collections.abc import Collection, Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from wcol_graphs.errors import EmptyEndpointSet, LoopEdge, NotAPartition, VertexOutOfRange

Edge = tuple[int, int]
VertexMap = dict[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge uv with the smaller endpoint first."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with vertices 0..n-1.

    Attributes:
        n (int): Number of vertices. The null graph has n = 0.
        edges (frozenset[Edge]): Edges as pairs (u, v) with u < v.
    """

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise VertexOutOfRange(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise VertexOutOfRange(f"edge ({u}, {v}) is not a normalized edge of a graph on {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge list in any orientation; repeated edges collapse."""
        normalized = set()
        for u, v in edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            normalized.add(normalize_edge(u, v))
        return cls(n, frozenset(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbourhood of every vertex, indexed by vertex."""
        adjacent: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adjacent[u].add(v)
            adjacent[v].add(u)
        return tuple(frozenset(neighbours) for neighbours in adjacent)

    @cached_property
    def nx(self) -> nx.Graph:
        """A frozen networkx view of the graph with nodes 0..n-1."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return nx.freeze(graph)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize_edge(u, v) in self.edges

    def check_vertex(self, v: int) -> None:
        """Raise VertexOutOfRange unless v is a vertex."""
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise VertexOutOfRange(f"vertex {v} is not in 0..{self.n - 1}")

    def check_vertices(self, vertices: Iterable[int]) -> None:
        for v in vertices:
            self.check_vertex(v)

    def neighborhood(self, vertices: Collection[int]) -> frozenset[int]:
        """Open neighbourhood N(X): vertices outside X with a neighbour in X."""
        inside = set(vertices)
        return frozenset(w for v in inside for w in self.adjacency[v] if w not in inside)

    def is_edgeless(self) -> bool:
        return not self.edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def relabel(g: Graph, mapping: VertexMap, n: int | None = None) -> Graph:
    """Rename every vertex v to mapping[v]; the result has `n` vertices (default: len(mapping))."""
    size = len(mapping) if n is None else n
    return Graph.from_edges(size, ((mapping[u], mapping[v]) for u, v in g.edges))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, VertexMap]:
    """Induced subgraph G[X], relabelled 0..|X|-1 in increasing order of the old labels."""
    kept = sorted(set(vertices))
    g.check_vertices(kept)
    old_to_new = {v: i for i, v in enumerate(kept)}
    edges = ((old_to_new[u], old_to_new[v]) for u, v in g.edges if u in old_to_new and v in old_to_new)
    return Graph.from_edges(len(kept), edges), old_to_new


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, VertexMap]:
    """G - U with the remaining vertices relabelled in increasing order."""
    gone = set(removed)
    g.check_vertices(gone)
    return induced_subgraph(g, (v for v in g.vertices if v not in gone))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """G - uv; vertex labels are unchanged."""
    edge = normalize_edge(u, v)
    if edge not in g.edges:
        raise VertexOutOfRange(f"({u}, {v}) is not an edge")
    return Graph(g.n, g.edges - {edge})


def contract_edge(g: Graph, u: int, v: int) -> tuple[Graph, VertexMap]:
    """G / uv: v is merged into u, labels of the other vertices are compacted in increasing order."""
    if not g.has_edge(u, v):
        raise VertexOutOfRange(f"({u}, {v}) is not an edge")
    survivors = [w for w in g.vertices if w != v]
    old_to_new = {w: i for i, w in enumerate(survivors)}
    old_to_new[v] = old_to_new[u]
    edges = {
        normalize_edge(old_to_new[a], old_to_new[b]) for a, b in g.edges if old_to_new[a] != old_to_new[b]
    }
    return Graph(g.n - 1, frozenset(edges)), old_to_new


def disjoint_union(*graphs: Graph) -> tuple[Graph, list[VertexMap]]:
    """G_1 ⊔ G_2 ⊔ ...: the i-th graph occupies the next block of labels."""
    maps: list[VertexMap] = []
    edges: list[Edge] = []
    offset = 0
    for graph in graphs:
        maps.append({v: v + offset for v in graph.vertices})
        edges.extend((u + offset, v + offset) for u, v in graph.edges)
        offset += graph.n
    return Graph(offset, frozenset(edges)), maps


def apex(g: Graph) -> tuple[Graph, VertexMap]:
    """K1 ⊕ G: a new vertex 0 adjacent to everything, old vertex v becomes v + 1."""
    old_to_new = {v: v + 1 for v in g.vertices}
    edges = [(u + 1, v + 1) for u, v in g.edges] + [(0, v + 1) for v in g.vertices]
    return Graph(g.n + 1, frozenset(edges)), old_to_new


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest vertex."""
    return sorted((frozenset(c) for c in nx.connected_components(g.nx)), key=min)


def is_connected(g: Graph) -> bool:
    """Connected graphs are nonnull."""
    return g.n > 0 and nx.is_connected(g.nx)


def distances_from(g: Graph, u: int, cutoff: int | None = None) -> dict[int, int]:
    """Breadth-first distances from u, optionally only up to `cutoff`."""
    g.check_vertex(u)
    return nx.single_source_shortest_path_length(g.nx, u, cutoff=cutoff)


def ball(g: Graph, u: int, r: int) -> frozenset[int]:
    """N^r[u]: the vertices at distance at most r from u."""
    if r < 0:
        raise VertexOutOfRange(f"radius must be nonnegative, got {r}")
    return frozenset(distances_from(g, u, cutoff=r))


def geodesic(g: Graph, from_set: Collection[int], to_set: Collection[int]) -> tuple[int, ...] | None:
    """Shortest X-Y path with no internal vertex in X ∪ Y, or None when there is none.

    Among the shortest such paths the lexicographically smallest vertex sequence is returned; when X and Y meet,
    the result is the one-vertex path on the smallest common vertex.

    Args:
        g (Graph): The graph.
        from_set (Collection[int]): The start set X.
        to_set (Collection[int]): The end set Y.

    Returns:
        tuple[int, ...] | None: The path from X to Y.
    """
    sources, targets = set(from_set), set(to_set)
    if not sources or not targets:
        raise EmptyEndpointSet("both endpoint sets must be nonempty")
    g.check_vertices(sources | targets)
    common = sources & targets
    if common:
        return (min(common),)

    # distance to Y inside G[Y ∪ I], where I holds the vertices allowed in the interior
    interior = set(g.vertices) - sources - targets
    to_target = nx.multi_source_dijkstra_path_length(g.nx.subgraph(targets | interior), targets)

    best: tuple[int, int] | None = None
    for x in sorted(sources):
        steps = [to_target[w] for w in g.neighbors(x) if w in to_target]
        if steps and (best is None or min(steps) + 1 < best[0]):
            best = (min(steps) + 1, x)
    if best is None:
        return None

    length, current = best
    path = [current]
    for remaining in range(length - 1, -1, -1):
        current = min(w for w in g.neighbors(current) if to_target.get(w) == remaining)
        path.append(current)
    return tuple(path)


def quotient(g: Graph, parts: Sequence[Collection[int]]) -> Graph:
    """G / P: one vertex per part (in the given order), adjacent iff some edge crosses between the parts."""
    owner: dict[int, int] = {}
    for index, part in enumerate(parts):
        if not part:
            raise NotAPartition(f"part {index} is empty")
        for v in part:
            g.check_vertex(v)
            if v in owner:
                raise NotAPartition(f"vertex {v} is in parts {owner[v]} and {index}")
            owner[v] = index
    if len(owner) != g.n:
        missing = min(set(g.vertices) - set(owner))
        raise NotAPartition(f"vertex {missing} is in no part")
    return Graph.from_edges(len(parts), ((owner[u], owner[v]) for u, v in g.edges if owner[u] != owner[v]))
