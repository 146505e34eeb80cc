"""Blocks, cut vertices and separations of order at most one."""

from __future__ import annotations

from collections.abc import Collection
from dataclasses import dataclass

import networkx as nx

from wcol_graphs.errors import NotConnected, NullGraph
from wcol_graphs.graph.graph import Graph, is_connected


def block_sets(graph: nx.Graph) -> list[frozenset[int]]:
    """Vertex sets of all blocks of a (possibly disconnected) networkx graph or subgraph view.

    Blocks are the maximal 2-connected subgraphs, the cut edges and the isolated vertices. They are returned in
    increasing order of their sorted vertex tuples.
    """
    found = [frozenset(block) for block in nx.biconnected_components(graph)]
    found.extend(frozenset([v]) for v in graph.nodes if graph.degree(v) == 0)
    return sorted(found, key=lambda block: tuple(sorted(block)))


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks and cut vertices of a connected graph together with their incidence tree.

    Attributes:
        blocks (tuple[frozenset[int], ...]): Vertex sets of the blocks.
        cut_vertices (frozenset[int]): The cut vertices.
        incidence (tuple[tuple[int, int], ...]): Pairs (block index, cut vertex) with the cut vertex in the block.
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    incidence: tuple[tuple[int, int], ...]

    def cuts_of(self, block_index: int) -> frozenset[int]:
        return self.blocks[block_index] & self.cut_vertices

    def leaf_blocks(self) -> list[tuple[int, int]]:
        """Blocks with exactly one cut vertex, as (block index, attachment vertex)."""
        leaves = []
        for index in range(len(self.blocks)):
            cuts = self.cuts_of(index)
            if len(cuts) == 1:
                leaves.append((index, next(iter(cuts))))
        return leaves


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Compute the block-cut tree of a connected graph.

    Raises:
        NotConnected: If g is null or disconnected.
    """
    if not is_connected(g):
        raise NotConnected("block_cut_tree needs a connected graph")
    blocks = tuple(block_sets(g.nx))
    cut_vertices = frozenset(nx.articulation_points(g.nx))
    incidence = tuple((i, v) for i, block in enumerate(blocks) for v in sorted(block & cut_vertices))
    return BlockCutTree(blocks, cut_vertices, incidence)


@dataclass(frozen=True)
class Separation:
    """A separation (A, B) of order at most one, stored by vertex sets.

    Since the order is at most one, both sides are induced subgraphs and no edge assignment is needed.
    """

    side_a: frozenset[int]
    side_b: frozenset[int]

    @property
    def cut(self) -> frozenset[int]:
        return self.side_a & self.side_b

    @property
    def order(self) -> int:
        return len(self.cut)

    def is_valid_for(self, g: Graph) -> bool:
        """Check A ∪ B = V(G), order ≤ 1 and that no edge joins A∖B to B∖A."""
        only_a, only_b = self.side_a - self.side_b, self.side_b - self.side_a
        crossing = any((u in only_a and v in only_b) or (u in only_b and v in only_a) for u, v in g.edges)
        return self.side_a | self.side_b == frozenset(g.vertices) and self.order <= 1 and not crossing

    def to_json(self) -> dict:
        return {"side_a": sorted(self.side_a), "side_b": sorted(self.side_b), "cut": sorted(self.cut)}


def block_separations(vertices: Collection[int], blocks: list[frozenset[int]], cuts: frozenset[int]):
    """Yield (B, cut) for every separation of order ≤ 1 whose B side is one of `blocks`.

    A block B gives an order-0 separation when it is a whole component with other vertices around, and an order-1
    separation at v when every cut vertex of B equals v (a leaf block, or a block that is its whole component).
    """
    everything = frozenset(vertices)
    for block in blocks:
        block_cuts = block & cuts
        if len(block_cuts) == 0:
            if len(everything) > len(block):
                yield block, frozenset()
            if len(block) >= 2:
                for v in sorted(block):
                    yield block, frozenset([v])
        elif len(block_cuts) == 1:
            yield block, block_cuts


def order_one_separations(g: Graph) -> list[Separation]:
    """All separations (A, B) of order ≤ 1 with A nonnull, B∖A nonnull and B a block.

    Raises:
        NullGraph: If g has no vertices.
    """
    if g.n == 0:
        raise NullGraph("order_one_separations needs a nonnull graph")
    everything = frozenset(g.vertices)
    blocks = block_sets(g.nx)
    cuts = frozenset(nx.articulation_points(g.nx))
    separations = block_separations(everything, blocks, cuts)
    return [Separation((everything - block) | cut, block) for block, cut in separations]
