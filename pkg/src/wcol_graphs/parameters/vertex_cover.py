"""Exact vertex cover number by branching on a vertex of maximum degree."""

from __future__ import annotations

import logging
from collections import Counter

from wcol_graphs.errors import SizeLimit
from wcol_graphs.graph.graph import Edge, Graph
from wcol_graphs.parameters.certificate import ParamCertificate, Parameter
from wcol_graphs.utils.budget import Budget, BudgetExceeded
from wcol_graphs.utils.file_utils import read_params

logger = logging.getLogger(__name__)


def _matching_size(edges: frozenset[Edge]) -> int:
    """Size of a greedy maximal matching, a lower bound on every cover of the edges."""
    matched: set[int] = set()
    size = 0
    for u, v in sorted(edges):
        if u not in matched and v not in matched:
            matched.update((u, v))
            size += 1
    return size


class VertexCoverSearch:
    """Branch on a maximum-degree vertex v: either v is in the cover, or all of N(v) is.

    Args:
        g (Graph): The graph.
        budget (Budget): Node budget.
    """

    def __init__(self, g: Graph, budget: Budget):
        self.g = g
        self.budget = budget
        self.best = frozenset(v for edge in g.edges for v in edge)

    def _branch(self, edges: frozenset[Edge], chosen: frozenset[int]) -> None:
        self.budget.tick()
        if not edges:
            if len(chosen) < len(self.best):
                self.best = chosen
            return
        if len(chosen) + _matching_size(edges) >= len(self.best):
            return
        degree = Counter(v for edge in edges for v in edge)
        v = min(degree, key=lambda w: (-degree[w], w))
        neighbours = frozenset(w for edge in edges if v in edge for w in edge if w != v)
        self._branch(frozenset(edge for edge in edges if v not in edge), chosen | {v})
        if len(neighbours) > 1:
            remaining = frozenset(edge for edge in edges if not (set(edge) & neighbours))
            self._branch(remaining, chosen | neighbours)

    def solve(self) -> frozenset[int]:
        self._branch(self.g.edges, frozenset())
        return self.best


def vertex_cover_number(g: Graph, budget: int | None = None) -> ParamCertificate:
    """Minimum vertex cover, with the cover as witness.

    Args:
        g (Graph): The graph.
        budget (int | None): Node budget; defaults to `vertex_cover.node_budget` from search_params.yml.

    Raises:
        SizeLimit: If the search needs more nodes than the budget.
    """
    limit = read_params("search_params.yml")["vertex_cover"]["node_budget"] if budget is None else budget
    search = VertexCoverSearch(g, Budget(limit))
    try:
        cover = search.solve()
    except BudgetExceeded as error:
        raise SizeLimit("vertex cover search", search.budget.nodes, limit) from error
    logger.debug("vertex cover of size %d found after %d nodes", len(cover), search.budget.nodes)
    return ParamCertificate(Parameter.VC, len(cover), cover)
