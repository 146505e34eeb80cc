"""Budget-bounded exhaustive searches for subgraphs, minor models and 𝓕-rich models.

Every search returns a SearchOutcome whose status separates a witness (FOUND), a completed search without one
(ABSENT), and a search stopped by its node budget (EXHAUSTED). Patterns are processed in a fixed order: next is
the vertex with the most already placed neighbours, so that adjacency constraints prune as early as possible.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass

from wcol_graphs.graph.canonical import vertex_mask
from wcol_graphs.graph.graph import Graph
from wcol_graphs.minors.model import Model, RichModel, SubgraphFamily
from wcol_graphs.utils.budget import Budget, BudgetExceeded, SearchStatus
from wcol_graphs.utils.file_utils import read_params

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a search.

    Attributes:
        status (SearchStatus): FOUND, ABSENT or EXHAUSTED.
        result: The witness when FOUND: an embedding tuple, a Model, a RichModel or a tuple of member indices.
        nodes (int): Search nodes spent.
    """

    status: SearchStatus
    result: object = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == SearchStatus.FOUND

    @property
    def absent(self) -> bool:
        return self.status == SearchStatus.ABSENT


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def search_order(pattern: Graph) -> list[int]:
    """Pattern vertices, each next one with the most placed neighbours (then higher degree, then smaller label)."""
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < pattern.n:
        v = max(
            (w for w in pattern.vertices if w not in placed),
            key=lambda w: (len(pattern.neighbors(w) & placed), pattern.degree(w), -w),
        )
        order.append(v)
        placed.add(v)
    return order


def twin_predecessors(pattern: Graph, order: list[int]) -> dict[int, int]:
    """For each pattern vertex, the previous vertex of its twin class in `order`, if any.

    Classes group vertices with equal open neighbourhoods, then the rest by equal closed neighbourhoods; any
    permutation inside a class is an automorphism of the pattern.
    """
    classes: dict[tuple, list[int]] = {}
    by_open: dict[frozenset[int], list[int]] = {}
    for v in order:
        by_open.setdefault(pattern.neighbors(v), []).append(v)
    for key, members in by_open.items():
        if len(members) > 1:
            classes["open", key] = members
        else:
            v = members[0]
            classes.setdefault(("closed", pattern.neighbors(v) | {v}), []).append(v)
    before = {}
    for members in classes.values():
        for earlier, later in zip(members, members[1:]):
            before[later] = earlier
    return before


class SubgraphSearch:
    """Backtracking for an injective map V(H) -> V(G) sending pattern edges to host edges (not induced).

    Args:
        pattern (Graph): The pattern H.
        host (Graph): The host G.
        budget (Budget): Node budget.
    """

    def __init__(self, pattern: Graph, host: Graph, budget: Budget):
        self.pattern = pattern
        self.host = host
        self.budget = budget
        self.order = search_order(pattern)
        position = {v: i for i, v in enumerate(self.order)}
        self.earlier = {p: sorted(q for q in pattern.neighbors(p) if position[q] < position[p]) for p in self.order}

    def _candidates(self, p: int, image: dict[int, int]) -> list[int] | range:
        anchors = self.earlier[p]
        if anchors:
            return sorted(self.host.neighbors(image[anchors[0]]))
        return self.host.vertices

    def _extend(self, i: int, image: dict[int, int], used: set[int]) -> bool:
        if i == len(self.order):
            return True
        p = self.order[i]
        for c in self._candidates(p, image):
            if c in used or self.host.degree(c) < self.pattern.degree(p):
                continue
            if any(not self.host.has_edge(c, image[q]) for q in self.earlier[p]):
                continue
            self.budget.tick()
            image[p] = c
            used.add(c)
            if self._extend(i + 1, image, used):
                return True
            del image[p]
            used.discard(c)
        return False

    def solve(self) -> tuple[int, ...] | None:
        image: dict[int, int] = {}
        if self.pattern.n > self.host.n or not self._extend(0, image, set()):
            return None
        return tuple(image[p] for p in self.pattern.vertices)


def _budget(section: str, budget: int | None) -> Budget:
    return Budget(read_params("search_params.yml")[section]["node_budget"] if budget is None else budget)


def is_subgraph(pattern: Graph, host: Graph, budget: int | None = None) -> SearchOutcome:
    """Search for H ⊆ G as a (not necessarily induced) subgraph.

    Args:
        pattern (Graph): The pattern H; keep it small (guideline: at most 8 vertices).
        host (Graph): The host G.
        budget (int | None): Node budget; defaults to `subgraph.node_budget` from search_params.yml.

    Returns:
        SearchOutcome: When FOUND, `result[x]` is the host vertex of pattern vertex x.
    """
    counter = _budget("subgraph", budget)
    search = SubgraphSearch(pattern, host, counter)
    try:
        embedding = search.solve()
    except BudgetExceeded:
        logger.info("subgraph search exhausted its budget of %s nodes", counter.limit)
        return SearchOutcome(SearchStatus.EXHAUSTED, None, counter.nodes)
    if embedding is None:
        return SearchOutcome(SearchStatus.ABSENT, None, counter.nodes)
    return SearchOutcome(SearchStatus.FOUND, embedding, counter.nodes)


def connected_sets(host: Graph, limit: int) -> list[int] | None:
    """Bit masks of all vertex sets inducing a connected subgraph, by size then by sorted vertices.

    Each set is generated once, from its smallest vertex, by extending with exclusive neighbours only. Returns
    None when there are more than `limit` of them.
    """
    adjacency = [vertex_mask(host.neighbors(v)) for v in host.vertices]
    found: list[int] = []

    def extend(subset: int, extension: int, closed: int, higher: int) -> None:
        found.append(subset)
        if len(found) > limit:
            raise BudgetExceeded
        while extension:
            low = extension & -extension
            extension ^= low
            w = low.bit_length() - 1
            exclusive = adjacency[w] & ~closed & higher
            extend(subset | low, extension | exclusive, closed | adjacency[w], higher)

    try:
        for v in host.vertices:
            higher = ~((1 << (v + 1)) - 1)
            extend(1 << v, adjacency[v] & higher, (1 << v) | adjacency[v], higher)
    except BudgetExceeded:
        return None
    return sorted(found, key=lambda mask: (mask.bit_count(), sorted(_bits(mask))))


class ModelSearch:
    """Assign pairwise disjoint connected host sets to pattern vertices, one vertex at a time.

    A candidate for pattern vertex p must avoid the host vertices already used and touch the branch set of every
    placed neighbour of p. Isolated pattern vertices only take minimal candidates (a single vertex, or a single
    family member for rich models). Twin pattern vertices take their branch sets in increasing order of smallest
    vertex. With a family, every branch set must contain a member.

    Args:
        pattern (Graph): The pattern H.
        host (Graph): The host G.
        budget (Budget): Node budget.
        sets (list[int]): Connected host sets as bit masks, sorted by size.
        family (SubgraphFamily | None): The family for rich-model search.
    """

    def __init__(self, pattern: Graph, host: Graph, budget: Budget, sets: list[int], family: SubgraphFamily | None):
        self.pattern = pattern
        self.host = host
        self.budget = budget
        self.order = search_order(pattern)
        position = {v: i for i, v in enumerate(self.order)}
        self.earlier = {p: [q for q in pattern.neighbors(p) if position[q] < position[p]] for p in self.order}
        self.twin_before = twin_predecessors(pattern, self.order)
        adjacency = [vertex_mask(host.neighbors(v)) for v in host.vertices]
        member_masks = [] if family is None else [vertex_mask(member) for member in family.members]

        def anchored(mask: int) -> int | None:
            if family is None:
                return -1
            return next((i for i, member in enumerate(member_masks) if member & ~mask == 0), None)

        self.general = self._prepare(sets, adjacency, anchored)
        if family is None:
            minimal = [1 << v for v in host.vertices]
        else:
            minimal = sorted(set(member_masks), key=lambda mask: (mask.bit_count(), sorted(_bits(mask))))
        self.minimal = self._prepare(minimal, adjacency, anchored)

    @staticmethod
    def _prepare(masks: list[int], adjacency: list[int], anchored) -> list[tuple[int, int, int, int]]:
        """(mask, size, closed neighbourhood mask, anchor) for every usable candidate."""
        prepared = []
        for mask in masks:
            anchor = anchored(mask)
            if anchor is None:
                continue
            reach = mask
            for v in _bits(mask):
                reach |= adjacency[v]
            prepared.append((mask, mask.bit_count(), reach, anchor))
        return prepared

    def _extend(self, i: int, used: int, free: int, chosen: dict[int, tuple[int, int]]) -> bool:
        if i == len(self.order):
            return True
        p = self.order[i]
        spare = free - (len(self.order) - i - 1)
        twin = self.twin_before.get(p)
        floor = _lowest(chosen[twin][0]) if twin is not None else -1
        candidates = self.general if self.pattern.degree(p) else self.minimal
        for mask, size, reach, anchor in candidates:
            if size > spare:
                break
            if mask & used or _lowest(mask) <= floor:
                continue
            if any(not (reach & chosen[q][0]) for q in self.earlier[p]):
                continue
            self.budget.tick()
            chosen[p] = (mask, anchor)
            if self._extend(i + 1, used | mask, free - size, chosen):
                return True
            del chosen[p]
        return False

    def solve(self) -> dict[int, tuple[int, int]] | None:
        chosen: dict[int, tuple[int, int]] = {}
        if not self._extend(0, 0, self.host.n, chosen):
            return None
        return chosen


def _model_search(
    pattern: Graph, host: Graph, budget: int | None, family: SubgraphFamily | None
) -> tuple[SearchStatus, dict[int, tuple[int, int]] | None, int]:
    params = read_params("search_params.yml")["model_search"]
    counter = Budget(params["node_budget"] if budget is None else budget)
    if pattern.n == 0:
        return SearchStatus.FOUND, {}, 0
    sets = connected_sets(host, params["connected_set_cap"]) if pattern.m else []
    if sets is None:
        logger.info("host has more than %d connected sets, model search skipped", params["connected_set_cap"])
        return SearchStatus.EXHAUSTED, None, 0
    search = ModelSearch(pattern, host, counter, sets, family)
    try:
        chosen = search.solve()
    except BudgetExceeded:
        logger.info("model search exhausted its budget of %s nodes", counter.limit)
        return SearchStatus.EXHAUSTED, None, counter.nodes
    if chosen is None:
        return SearchStatus.ABSENT, None, counter.nodes
    return SearchStatus.FOUND, chosen, counter.nodes


def find_model(pattern: Graph, host: Graph, budget: int | None = None) -> SearchOutcome:
    """Search for a model of H in G, i.e. decide whether H is a minor of G.

    Args:
        pattern (Graph): The pattern H.
        host (Graph): The host G.
        budget (int | None): Node budget; defaults to `model_search.node_budget` from search_params.yml.

    Returns:
        SearchOutcome: When FOUND, `result` is a Model.
    """
    status, chosen, nodes = _model_search(pattern, host, budget, None)
    if chosen is None:
        return SearchOutcome(status, None, nodes)
    branch = [frozenset(_bits(chosen[x][0])) for x in pattern.vertices]
    return SearchOutcome(status, Model(pattern, tuple(branch)), nodes)


def find_rich_model(pattern: Graph, host: Graph, family: SubgraphFamily, budget: int | None = None) -> SearchOutcome:
    """Search for an 𝓕-rich model of H in G: every branch set contains a member of the family.

    Returns:
        SearchOutcome: When FOUND, `result` is a RichModel whose anchors name the contained members.
    """
    status, chosen, nodes = _model_search(pattern, host, budget, family)
    if chosen is None:
        return SearchOutcome(status, None, nodes)
    branch = tuple(frozenset(_bits(chosen[x][0])) for x in pattern.vertices)
    anchors = tuple(chosen[x][1] for x in pattern.vertices)
    return SearchOutcome(status, RichModel(Model(pattern, branch), anchors), nodes)


def disjoint_members(family: SubgraphFamily, k: int, budget: int | None = None) -> SearchOutcome:
    """Search for k pairwise disjoint members of the family.

    Returns:
        SearchOutcome: When FOUND, `result` is the increasing tuple of member indices.
    """
    counter = _budget("model_search", budget)
    members = family.members

    def extend(start: int, used: frozenset[int], picked: list[int]) -> bool:
        if len(picked) == k:
            return True
        for i in range(start, len(members) - (k - len(picked)) + 1):
            if members[i] & used:
                continue
            counter.tick()
            picked.append(i)
            if extend(i + 1, used | members[i], picked):
                return True
            picked.pop()
        return False

    picked: list[int] = []
    try:
        found = extend(0, frozenset(), picked)
    except BudgetExceeded:
        return SearchOutcome(SearchStatus.EXHAUSTED, None, counter.nodes)
    if not found:
        return SearchOutcome(SearchStatus.ABSENT, None, counter.nodes)
    return SearchOutcome(SearchStatus.FOUND, tuple(picked), counter.nodes)
