"""The single entry point that builds any family spec into a BuiltGraph."""

from __future__ import annotations

import logging
from collections.abc import Mapping

from wcol_graphs.constructions.basic import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    dary_tree,
    grid_graph,
    ladder_graph,
    path_graph,
    star_graph,
)
from wcol_graphs.constructions.builder import BuiltGraph
from wcol_graphs.constructions.gluing import check_size, double_tower, gadget_hkl, grohe_graph, l_compose, tower
from wcol_graphs.constructions.recipe import BuildRecipe, Family, normalize_spec
from wcol_graphs.errors import BadParams
from wcol_graphs.graph.graph import Graph, apex, disjoint_union

logger = logging.getLogger(__name__)

ROOTED_BASICS = {Family.STAR, Family.TERNARY_TREE, Family.DARY_TREE}


def basic_families(tag: str | Family, params: Mapping) -> Graph:
    """Build one of the basic families (no nested spec).

    Tags and parameters: complete (n), complete-bipartite (s, t), path (n), cycle (n), star (n leaves), ladder
    (k rungs), ternary-tree (k levels), dary-tree (h levels, d children), grid (rows, cols), edgeless (n).

    Raises:
        BadParams: If the tag is not a basic family or a parameter is out of range.
    """
    family, p = normalize_spec({"family": Family.infer_type(tag).value, "params": dict(params)})
    builders = {
        Family.COMPLETE: lambda: complete_graph(p["n"]),
        Family.COMPLETE_BIPARTITE: lambda: complete_bipartite_graph(p["s"], p["t"]),
        Family.PATH: lambda: path_graph(p["n"]),
        Family.CYCLE: lambda: cycle_graph(p["n"]),
        Family.STAR: lambda: star_graph(p["n"]),
        Family.LADDER: lambda: ladder_graph(p["k"]),
        Family.TERNARY_TREE: lambda: dary_tree(p["k"], 3),
        Family.DARY_TREE: lambda: dary_tree(p["h"], p["d"]),
        Family.GRID: lambda: grid_graph(p["rows"], p["cols"]),
        Family.EDGELESS: lambda: Graph(p["n"]),
    }
    if family not in builders:
        raise BadParams(f"{family.value} is not a basic family")
    return builders[family]()


def build_family(spec: str | Mapping, vertex_cap: int | None = None) -> BuiltGraph:
    """Build a family spec, refusing builds whose predicted size exceeds the cap.

    Gluing constructions are labelled breadth-first from their construction root; basic families keep their
    natural labelling (already breadth-first from the root for stars and d-ary trees). Every result matches
    predict_size exactly.

    Args:
        spec (str | Mapping): ``"grid:rows=3,cols=3"`` or ``{"family": ..., "params": {...}}``.
        vertex_cap (int | None): Overrides `constructions.vertex_cap`.

    Returns:
        BuiltGraph: The graph with its recipe, root and markers.

    Raises:
        BadParams: For unknown families or out-of-range parameters.
        SizeLimit: If the predicted vertex count exceeds the cap.
    """
    recipe = BuildRecipe.of(spec)
    check_size(recipe.family.value, recipe.vertices, vertex_cap)
    family, p = recipe.family, recipe.params
    root: int | None = None
    markers: dict[str, int] = {}
    halves: tuple = ()

    if family == Family.GROHE:
        rooted = grohe_graph(p["r"], p["t"], p.get("d"), vertex_cap)
        graph, root = rooted.graph, rooted.root
    elif family == Family.GADGET:
        gadget = gadget_hkl(p["k"], p["l"], vertex_cap)
        graph, root, markers = gadget.graph, gadget.u, {"u": gadget.u, "v": gadget.v}
    elif family in (Family.TOWER, Family.DOUBLE_TOWER):
        base = build_family(p["base"], vertex_cap).graph
        if family == Family.TOWER:
            rooted = tower(base, p["h"], p["d"], vertex_cap)
        else:
            rooted = double_tower(base, p["h"], p["d"], vertex_cap)
            halves = rooted.halves
        graph, root = rooted.graph, rooted.root
    elif family == Family.LCOMPOSE:
        base = build_family(p["base"], vertex_cap)
        piece = build_family(p["piece"], vertex_cap)
        base_root = 0 if base.root is None else base.root
        composed = l_compose(base.graph, piece.rooted(), p["d"], base_root)
        graph, root = composed.graph, composed.root
    elif family == Family.APEX:
        graph, _ = apex(build_family(p["base"], vertex_cap).graph)
        root = 0
    elif family == Family.DISJOINT_COPIES:
        base = build_family(p["base"], vertex_cap).graph
        graph, _ = disjoint_union(*[base] * p["k"])
    else:
        graph = basic_families(family, p)
        if family in ROOTED_BASICS:
            root = 0
    logger.debug("built %s with %d vertices and %d edges", family.value, graph.n, graph.m)
    return BuiltGraph(graph, recipe, root, markers, halves)
