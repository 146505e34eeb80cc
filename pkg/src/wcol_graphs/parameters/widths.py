"""Exact treewidth and pathwidth of small graphs by dynamic programming over vertex subsets.

Treewidth uses the elimination-order formulation TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where
Q(S, v) is the set of vertices outside S ∪ {v} reachable from v through S. Pathwidth uses the vertex separation
number VS(S) = max(|∂S|, min over v in S of VS(S - v)), ∂S being the vertices of S with a neighbour outside S.
Subsets are bit masks.
"""

from __future__ import annotations

import logging

from wcol_graphs.errors import BadParams, SizeLimit
from wcol_graphs.graph.graph import Graph
from wcol_graphs.graph.structures import PathDecomposition, TreeDecomposition, path_decomposition_of_ordering
from wcol_graphs.parameters.certificate import ParamCertificate, Parameter
from wcol_graphs.utils.file_utils import read_params

logger = logging.getLogger(__name__)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SubsetWidthSolver:
    """Subset dynamic programs for treewidth and pathwidth on one graph.

    Args:
        g (Graph): The graph; at most `widths.vertex_cap` vertices.
    """

    def __init__(self, g: Graph):
        cap = read_params("search_params.yml")["widths"]["vertex_cap"]
        if g.n > cap:
            raise SizeLimit("exact treewidth/pathwidth vertex count", g.n, cap)
        self.g = g
        self.adjacency = [sum(1 << w for w in g.adjacency[v]) for v in g.vertices]
        self.full = (1 << g.n) - 1

    def reach_outside(self, inside: int, v: int) -> int:
        """Mask of the vertices outside inside ∪ {v} reachable from v through `inside`."""
        visited = 1 << v
        frontier = [v]
        reached = 0
        while frontier:
            x = frontier.pop()
            fresh = self.adjacency[x] & ~visited
            visited |= fresh
            reached |= fresh & ~inside
            frontier.extend(_bits(fresh & inside))
        return reached

    def boundary(self, mask: int) -> int:
        outside = self.full & ~mask
        return sum(1 for v in _bits(mask) if self.adjacency[v] & outside)

    def elimination_table(self) -> list[int]:
        table = [0] * (self.full + 1)
        table[0] = -1
        for mask in range(1, self.full + 1):
            table[mask] = min(
                max(table[mask ^ (1 << v)], self.reach_outside(mask ^ (1 << v), v).bit_count()) for v in _bits(mask)
            )
        return table

    def separation_table(self) -> list[int]:
        table = [0] * (self.full + 1)
        for mask in range(1, self.full + 1):
            table[mask] = max(self.boundary(mask), min(table[mask ^ (1 << v)] for v in _bits(mask)))
        return table

    def treewidth(self) -> tuple[int, TreeDecomposition]:
        """Treewidth and a decomposition of that width built from an optimal elimination order."""
        table = self.elimination_table()
        order: list[int] = []
        mask = self.full
        while mask:
            v = next(
                v
                for v in _bits(mask)
                if max(table[mask ^ (1 << v)], self.reach_outside(mask ^ (1 << v), v).bit_count()) == table[mask]
            )
            order.append(v)
            mask ^= 1 << v
        order.reverse()
        return table[self.full], decomposition_of_elimination_order(self.g, order)

    def pathwidth(self) -> tuple[int, PathDecomposition]:
        """Pathwidth and a path decomposition read off an optimal vertex separation ordering."""
        table = self.separation_table()
        sequence: list[int] = []
        mask = self.full
        while mask:
            v = min(_bits(mask), key=lambda w: table[mask ^ (1 << w)])
            sequence.append(v)
            mask ^= 1 << v
        sequence.reverse()
        return table[self.full], path_decomposition_of_ordering(self.g, sequence)


def decomposition_of_elimination_order(g: Graph, order: list[int]) -> TreeDecomposition:
    """Tree decomposition of the fill-in graph of an elimination order.

    Bag i is v_i with its later neighbours in the fill-in graph; its parent is the bag of the earliest of those
    neighbours. Bags without later neighbours are chained to the bag of the last vertex.
    """
    position = {v: i for i, v in enumerate(order)}
    fill = [set(g.adjacency[v]) for v in g.vertices]
    bags = []
    tree_edges = []
    for i, v in enumerate(order):
        later = {w for w in fill[v] if position[w] > i}
        bags.append(frozenset(later | {v}))
        for a in later:
            fill[a].update(later - {a})
        if later:
            tree_edges.append((i, position[min(later, key=position.get)]))
        elif i < len(order) - 1:
            tree_edges.append((i, len(order) - 1))
    return TreeDecomposition.of(Graph.from_edges(len(order), tree_edges), bags)


def treewidth_pathwidth_exact(g: Graph, which: Parameter | str) -> ParamCertificate:
    """Exact treewidth or pathwidth with a decomposition of that width as witness.

    The null graph gets value 0 and a single empty bag.

    Args:
        g (Graph): The graph, with at most `widths.vertex_cap` vertices (14 by default).
        which (Parameter | str): "tw" or "pw".

    Raises:
        SizeLimit: If g has more vertices than the cap.
        BadParams: If `which` is neither tw nor pw.
    """
    parameter = Parameter.infer_type(which) if isinstance(which, str) else which
    if parameter not in (Parameter.TW, Parameter.PW):
        raise BadParams(f"treewidth_pathwidth_exact computes tw or pw, not {parameter.value}")
    if g.n == 0:
        empty = TreeDecomposition.of(Graph(1), [()]) if parameter == Parameter.TW else PathDecomposition.of([()])
        return ParamCertificate(parameter, 0, empty)
    solver = SubsetWidthSolver(g)
    value, decomposition = solver.treewidth() if parameter == Parameter.TW else solver.pathwidth()
    logger.debug("%s = %d on %r", parameter.value, value, g)
    return ParamCertificate(parameter, value, decomposition)
