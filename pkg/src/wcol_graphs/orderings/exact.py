"""Exact weak coloring numbers by branch-and-bound over ordering prefixes."""

from __future__ import annotations

import logging
from collections.abc import Collection

import networkx as nx

from wcol_graphs.graph.graph import Graph
from wcol_graphs.orderings.ordering import Ordering, WcolCertificate
from wcol_graphs.orderings.reachability import check_scope, reach_of, wcol_of_ordering
from wcol_graphs.utils.budget import Budget, BudgetExceeded
from wcol_graphs.utils.file_utils import read_params

logger = logging.getLogger(__name__)


def twin_classes(g: Graph, scope: Collection[int]) -> dict[int, int]:
    """Map every scope vertex to the smallest scope vertex it is a (true or false) twin of.

    Swapping two twins is an automorphism of G that preserves S, so a search may branch on one vertex per class.
    """
    forest = nx.utils.UnionFind(sorted(scope))
    members = sorted(scope)
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if g.adjacency[u] - {v} == g.adjacency[v] - {u}:
                forest.union(u, v)
    return {v: min(group) for group in forest.to_sets() for v in group}


class WcolBranchAndBound:
    """Depth-first branch-and-bound over prefixes of orderings of S.

    Once a prefix v_1..v_k is fixed, the contribution of each v_i to every weak reachability set is determined (it
    only depends on v_1..v_{i-1}), so the partial maximum is a monotone lower bound along every extension.

    Args:
        g (Graph): The graph.
        scope (Collection[int]): The scope S to order.
        r (int): The radius.
        budget (Budget): Node budget; exhaustion stops the search with the best incumbent.
    """

    def __init__(self, g: Graph, scope: Collection[int], r: int, budget: Budget):
        self.g = g
        self.scope = frozenset(scope)
        self.r = r
        self.budget = budget
        self.representative = twin_classes(g, self.scope)
        self.best_value = len(self.scope) + 1
        self.best_sequence: tuple[int, ...] | None = None
        self.lower_bound = self._global_lower_bound()

    def _global_lower_bound(self) -> int:
        if not self.scope:
            return 0
        if self.r >= 1 and len(self.scope) == self.g.n and self.g.m > 0:
            # wcol_r ≥ wcol_1 = degeneracy + 1
            return max(nx.core_number(self.g.nx).values()) + 1
        return 1

    def _candidates(self, placed: set[int]) -> list[int]:
        seen_classes: set[int] = set()
        candidates = []
        for v in sorted(self.scope - placed):
            if self.representative[v] not in seen_classes:
                seen_classes.add(self.representative[v])
                candidates.append(v)
        return candidates

    def _extend(self, prefix: list[int], placed: set[int], counts: dict[int, int], current: int) -> None:
        if len(prefix) == len(self.scope):
            if current < self.best_value:
                self.best_value, self.best_sequence = current, tuple(prefix)
                logger.debug("wcol_exact incumbent %d after %d nodes", current, self.budget.nodes)
            return
        options = []
        for v in self._candidates(placed):
            self.budget.tick()
            reach = reach_of(self.g, v, placed, self.r)
            options.append((max([current] + [counts.get(u, 0) + 1 for u in reach]), v, reach))
        options.sort(key=lambda option: (option[0], option[1]))
        for value, v, reach in options:
            if value >= self.best_value or self.best_value <= self.lower_bound:
                return
            for u in reach:
                counts[u] = counts.get(u, 0) + 1
            prefix.append(v)
            placed.add(v)
            self._extend(prefix, placed, counts, value)
            placed.discard(v)
            prefix.pop()
            for u in reach:
                counts[u] -= 1

    def solve(self) -> tuple[tuple[int, ...] | None, bool]:
        """Run the search; returns the best sequence found and whether the search completed."""
        try:
            self._extend([], set(), {}, 0)
        except BudgetExceeded:
            logger.info("wcol_exact budget of %s nodes exhausted, best so far %d", self.budget.limit, self.best_value)
            return self.best_sequence, False
        return self.best_sequence, True


def wcol_exact(
    g: Graph, scope: Collection[int] | None = None, r: int = 1, budget: int | None = None
) -> WcolCertificate:
    """wcol_r(G, S): the minimum over orderings of S of wcol_r(G, S, σ).

    Args:
        g (Graph): The graph.
        scope (Collection[int] | None): The scope S; all of V(G) when omitted.
        r (int): The radius.
        budget (int | None): Node budget; defaults to `wcol_exact.node_budget` from search_params.yml.

    Returns:
        WcolCertificate: exact=True when the search completed, otherwise the best ordering found.
    """
    params = read_params("search_params.yml")["wcol_exact"]
    scope = check_scope(g, g.vertices if scope is None else scope)
    if len(scope) > params["vertex_guideline"]:
        logger.warning(
            "wcol_exact on %d scope vertices exceeds the guideline of %d", len(scope), params["vertex_guideline"]
        )
    counter = Budget(params["node_budget"] if budget is None else budget)
    search = WcolBranchAndBound(g, scope, r, counter)
    sequence, completed = search.solve()
    if sequence is None:
        sequence = tuple(sorted(scope))
    certificate = wcol_of_ordering(g, scope, Ordering(sequence), r)
    return WcolCertificate(
        r,
        certificate.value,
        certificate.ordering,
        certificate.witness_vertex,
        certificate.witness_set,
        exact=completed,
        nodes=counter.nodes,
    )
