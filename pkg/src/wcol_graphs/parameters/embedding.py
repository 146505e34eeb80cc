"""rtd2 read off the universal family: the least t with G ⊆ G_{r,t-1} for some r.

A graph G with at least one edge satisfies rtd2(G) ≤ t exactly when G is a subgraph of G_{r,t-1} for some r.
Only finitely many r can be tried, so a level where no embedding turns up is never proof of absence; the result
status records how far the search supports the value.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from wcol_graphs.constructions.builder import RootedGraph
from wcol_graphs.constructions.gluing import grohe_graph
from wcol_graphs.constructions.recipe import grohe_size
from wcol_graphs.errors import NoEdge
from wcol_graphs.graph.graph import Graph
from wcol_graphs.minors.search import is_subgraph
from wcol_graphs.parameters.recursive import rooted_twodepth
from wcol_graphs.utils.budget import SearchStatus
from wcol_graphs.utils.file_utils import read_params

logger = logging.getLogger(__name__)


class EmbeddingStatus(Enum):
    """How well the embedding search supports its value."""

    CONFIRMED = "confirmed"  # found at t and rtd2 = t
    CONSISTENT = "consistent"  # found at t > rtd2: the level rtd2 - 1 needs a larger r than searched
    INCONCLUSIVE = "inconclusive"  # no embedding found at any level
    CONTRADICTED = "contradicted"  # found at t < rtd2


@dataclass(frozen=True)
class LevelSearch:
    """Outcome of searching G inside G_{1,t}, ..., G_{r_budget,t} for one level t."""

    level: int
    status: SearchStatus
    r: int | None = None
    embedding: tuple[int, ...] | None = None
    skipped: tuple[int, ...] = ()


@dataclass(frozen=True)
class EmbeddingResult:
    """Result of rtd2_by_embedding.

    Attributes:
        t (int | None): Least t whose level t - 1 yielded an embedding, None when none did.
        status (EmbeddingStatus): How the value compares to rooted_twodepth.
        rtd2 (int): rooted_twodepth of the graph.
        levels (tuple[LevelSearch, ...]): The per-level searches, lowest level first.
    """

    t: int | None
    status: EmbeddingStatus
    rtd2: int
    levels: tuple[LevelSearch, ...]

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "status": self.status.value,
            "rtd2": self.rtd2,
            "levels": [
                {"level": s.level, "status": s.status.value, "r": s.r, "skipped_r": list(s.skipped)}
                for s in self.levels
            ],
        }


@lru_cache(maxsize=32)
def _grohe_host(r: int, t: int) -> RootedGraph:
    return grohe_graph(r, t, vertex_cap=None)


def search_grohe_level(
    g: Graph, level: int, r_budget: int, host_vertex_cap: int, budget: int | None = None
) -> LevelSearch:
    """Search G inside G_{r,level} for r = 1, ..., r_budget, skipping hosts above the vertex cap.

    The status is FOUND at the first r that embeds G, ABSENT when every host was built and searched completely,
    and EXHAUSTED otherwise.
    """
    skipped: list[int] = []
    exhausted = False
    for r in range(1, r_budget + 1):
        vertices = grohe_size(r, level)[0]
        if vertices > host_vertex_cap:
            skipped.append(r)
            continue
        outcome = is_subgraph(g, _grohe_host(r, level).graph, budget)
        if outcome.found:
            logger.debug("graph embeds into G_{%d,%d} after %d nodes", r, level, outcome.nodes)
            return LevelSearch(level, SearchStatus.FOUND, r, outcome.result, tuple(skipped))
        exhausted = exhausted or outcome.status == SearchStatus.EXHAUSTED
    status = SearchStatus.EXHAUSTED if exhausted or skipped else SearchStatus.ABSENT
    return LevelSearch(level, status, skipped=tuple(skipped))


def rtd2_by_embedding(
    g: Graph, r_budget: int | None = None, host_vertex_cap: int | None = None, budget: int | None = None
) -> EmbeddingResult:
    """The least t such that g embeds into G_{r,t-1} for some r ≤ r_budget, compared with rooted_twodepth.

    Args:
        g (Graph): A graph with at least one edge; keep it small, subgraph search is exponential.
        r_budget (int | None): Largest r tried; defaults to `embedding.r_budget`.
        host_vertex_cap (int | None): Hosts with more vertices are skipped; defaults to `embedding.host_vertex_cap`.
        budget (int | None): Node budget per subgraph search; defaults to `embedding.node_budget`.

    Raises:
        NoEdge: If g has no edge.
        SizeLimit: If rooted_twodepth exceeds its memo cap.
    """
    if g.is_edgeless():
        raise NoEdge("rtd2_by_embedding needs a graph with at least one edge")
    params = read_params("search_params.yml")["embedding"]
    r_budget = params["r_budget"] if r_budget is None else r_budget
    host_vertex_cap = params["host_vertex_cap"] if host_vertex_cap is None else host_vertex_cap
    budget = params["node_budget"] if budget is None else budget

    rtd2 = rooted_twodepth(g).value
    levels = []
    for t in range(2, g.n + 1):
        search = search_grohe_level(g, t - 1, r_budget, host_vertex_cap, budget)
        levels.append(search)
        if search.status != SearchStatus.FOUND:
            continue
        if t == rtd2:
            status = EmbeddingStatus.CONFIRMED
        elif t > rtd2:
            status = EmbeddingStatus.CONSISTENT
        else:
            logger.error("embedding at level %d contradicts rtd2 = %d", t - 1, rtd2)
            status = EmbeddingStatus.CONTRADICTED
        return EmbeddingResult(t, status, rtd2, tuple(levels))
    return EmbeddingResult(None, EmbeddingStatus.INCONCLUSIVE, rtd2, tuple(levels))
