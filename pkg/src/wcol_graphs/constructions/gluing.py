"""Gluing constructions: L_d(B, H, u), the graphs G_{r,t}, towers T_{h,d}(X) and T'_{h,d}(X), and gadgets H_{k,l}.

Roots are identified through explicit vertex maps, and every result is relabelled breadth-first from its root.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb

from wcol_graphs.constructions.builder import GraphBuilder, RootedGraph, compose
from wcol_graphs.constructions.recipe import gadget_size, grohe_size, tower_size
from wcol_graphs.errors import BadParams, NullPiece, SizeLimit
from wcol_graphs.graph.graph import Graph, VertexMap, apex
from wcol_graphs.utils.file_utils import read_params

logger = logging.getLogger(__name__)


def check_size(what: str, vertices: int, vertex_cap: int | None = None) -> None:
    """Refuse a build whose predicted vertex count exceeds the cap (`constructions.vertex_cap` by default)."""
    cap = read_params("search_params.yml")["constructions"]["vertex_cap"] if vertex_cap is None else vertex_cap
    if vertices > cap:
        raise SizeLimit(f"{what} vertex count", vertices, cap)


@dataclass(frozen=True)
class LComposition:
    """Result of l_compose.

    Attributes:
        graph (Graph): L_d(B, H, u).
        root (int): Image of the chosen root of B.
        base_map (VertexMap): Embedding of B.
        copy_maps (dict[tuple[int, int], VertexMap]): Embedding of the copy H_{i,x}, for i < d and x in V(B).
    """

    graph: Graph
    root: int
    base_map: VertexMap
    copy_maps: dict[tuple[int, int], VertexMap]

    def rooted(self) -> RootedGraph:
        return RootedGraph(self.graph, self.root)


@dataclass(frozen=True)
class DoubleTower(RootedGraph):
    """T'_{h,d}(X): two copies of T_{h,d}(X) sharing their root; `halves` embeds the tower into each copy."""

    halves: tuple[VertexMap, ...] = ()


@dataclass(frozen=True)
class Gadget:
    """H_{k,l} with its two marked vertices u and v."""

    graph: Graph
    u: int
    v: int


def l_compose(b: Graph, h: RootedGraph, d: int, b_root: int = 0) -> LComposition:
    """L_d(B, H, u): d copies of H glued by their root onto every vertex of B.

    Args:
        b (Graph): The base graph B.
        h (RootedGraph): The piece H with its root u.
        d (int): Number of copies per vertex of B, at least 1.
        b_root (int): Vertex of B the result is labelled from.

    Returns:
        LComposition: The graph with |V(B)|·(1 + d(|V(H)| - 1)) vertices and the placement maps.

    Raises:
        NullPiece: If B or H is null.
    """
    if b.n == 0 or h.graph.n == 0:
        raise NullPiece("l_compose needs nonnull pieces")
    if d < 1:
        raise BadParams(f"l_compose needs d ≥ 1, got {d}")
    builder = GraphBuilder()
    base_map = builder.add_graph(b)
    copies = {(i, x): builder.add_graph(h.graph, {h.root: base_map[x]}) for x in b.vertices for i in range(d)}
    graph, relabel = builder.build(base_map[b_root])
    copy_maps = {key: compose(placed, relabel) for key, placed in copies.items()}
    return LComposition(graph, relabel[base_map[b_root]], compose(base_map, relabel), copy_maps)


def grohe_graph(r: int, t: int, d_override: int | None = None, vertex_cap: int | None = None) -> RootedGraph:
    """G_{r,t}: K_1 when r = 0 or t = 0, otherwise L_d(G_{r-1,t}, K_1 ⊕ G_{r,t-1}, apex) with d = C(r+t, t).

    The root is the vertex of the innermost G_{0,t}. A `d_override` replaces every multiplicity by the same d.

    Raises:
        SizeLimit: If the predicted vertex count exceeds the cap.
    """
    if r < 0 or t < 0:
        raise BadParams(f"grohe_graph needs r, t ≥ 0, got r={r}, t={t}")
    check_size(f"G_{{{r},{t}}}", grohe_size(r, t, d_override)[0], vertex_cap)
    built: dict[tuple[int, int], RootedGraph] = {}
    for i in range(r + 1):
        for j in range(t + 1):
            if i == 0 or j == 0:
                built[i, j] = RootedGraph(Graph(1), 0)
                continue
            d = comb(i + j, j) if d_override is None else d_override
            base = built[i - 1, j]
            cone, _ = apex(built[i, j - 1].graph)
            built[i, j] = l_compose(base.graph, RootedGraph(cone, 0), d, base.root).rooted()
    logger.debug("built G_{%d,%d} with %d vertices", r, t, built[r, t].graph.n)
    return built[r, t]


def tower(x: Graph, h: int, d: int, vertex_cap: int | None = None) -> RootedGraph:
    """T_{h,d}(X): K_1 ⊕ X rooted at the apex for h = 1, else L_d(K_1 ⊕ X, T_{h-1,d}(X), s) rooted at the apex."""
    if h < 1 or d < 1:
        raise BadParams(f"tower needs h, d ≥ 1, got h={h}, d={d}")
    check_size("tower", tower_size((x.n, x.m), h, d)[0], vertex_cap)
    cone, _ = apex(x)
    current = RootedGraph(cone, 0)
    for _ in range(h - 1):
        current = l_compose(cone, current, d, 0).rooted()
    return current


def double_tower(x: Graph, h: int, d: int, vertex_cap: int | None = None) -> DoubleTower:
    """T'_{h,d}(X): two disjoint copies of T_{h,d}(X) with their roots identified."""
    check_size("double tower", 2 * tower_size((x.n, x.m), h, d)[0] - 1, vertex_cap)
    single = tower(x, h, d, vertex_cap)
    builder = GraphBuilder()
    first = builder.add_graph(single.graph)
    second = builder.add_graph(single.graph, {single.root: first[single.root]})
    graph, relabel = builder.build(first[single.root])
    halves = (compose(first, relabel), compose(second, relabel))
    return DoubleTower(graph, relabel[first[single.root]], halves)


def gadget_hkl(k: int, length: int, vertex_cap: int | None = None) -> Gadget:
    """H_{k,l}, where td2(H_{k,l}) ≤ k and rtd2(H_{k,l}) ≥ 2k - 2 for l ≥ k ≥ 2.

    H_{2,l} is a path on l vertices with ends u, v. H_{k,l} takes two copies H_1, H_2 of K_1 ⊕ H_{k-1,l} and
    identifies v of H_1 with u of H_2; u is then the u of H_1 and v the v of H_2.
    """
    if k < 2 or length < 2:
        raise BadParams(f"gadget needs k, l ≥ 2, got k={k}, l={length}")
    check_size("gadget", gadget_size(k, length)[0], vertex_cap)
    current = Gadget(Graph(length, frozenset((i, i + 1) for i in range(length - 1))), 0, length - 1)
    for _ in range(k - 2):
        cone, into_cone = apex(current.graph)
        builder = GraphBuilder()
        first = builder.add_graph(cone)
        second = builder.add_graph(cone, {into_cone[current.u]: first[into_cone[current.v]]})
        u, v = first[into_cone[current.u]], second[into_cone[current.v]]
        graph, relabel = builder.build(u)
        current = Gadget(graph, relabel[u], relabel[v])
    return current
