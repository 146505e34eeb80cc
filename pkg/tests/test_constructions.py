"""Test suite for the graph families, the gluing constructions and their size predictions."""

from math import comb

import networkx as nx
import pytest

from wcol_graphs.constructions.basic import complete_graph, dary_tree, grid_graph, ladder_graph, path_graph
from wcol_graphs.constructions.builder import RootedGraph
from wcol_graphs.constructions.families import build_family
from wcol_graphs.constructions.gluing import double_tower, gadget_hkl, grohe_graph, l_compose, tower
from wcol_graphs.constructions.recipe import (
    BuildRecipe,
    Family,
    gadget_size,
    grohe_size,
    lcompose_size,
    parse_family_spec,
    tower_size,
)
from wcol_graphs.errors import BadParams, NullPiece, SizeLimit
from wcol_graphs.graph.graph import Graph
from wcol_graphs.orderings.exact import wcol_exact
from wcol_graphs.parameters.recursive import RootedTwoDepthSolver, TwoDepthSolver


def test_basic_families():  # noqa: D103
    """Sizes and labelling conventions of the basic families."""
    assert (ladder_graph(3).n, ladder_graph(3).m) == (6, 7), "A ladder with three rungs has 6 vertices, 7 edges"
    tree = dary_tree(3, 2)
    assert tree.n == 7 and tree.neighbors(0) == frozenset({1, 2}), "Children of the root are 1 and 2"
    assert tree.neighbors(2) == frozenset({0, 5, 6}), "Children of 2 are 5 and 6"
    assert grid_graph(2, 3).has_edge(1, 4), "Vertex (0, 1) sits above (1, 1)"


def test_parse_family_spec():  # noqa: D103
    """Family specs are parsed into tags and integer parameters."""
    assert parse_family_spec("grid:rows=2,cols=3") == {"family": "grid", "params": {"rows": 2, "cols": 3}}, (
        "Both parameters should be read as integers"
    )
    with pytest.raises(BadParams):
        parse_family_spec("grid:rows")
    with pytest.raises(BadParams):
        parse_family_spec("hypercube:n=3")


@pytest.mark.parametrize(
    "spec",
    ["cycle:n=2", "gadget:k=1,l=3", "complete", {"family": "tower", "params": {"h": 1, "d": 1}}],
)
def test_invalid_specs(spec):  # noqa: D103
    """Parameters below their minimum and missing nested specs are rejected."""
    with pytest.raises(BadParams):
        BuildRecipe.of(spec)


@pytest.mark.parametrize(
    "spec",
    [
        "complete:n=5",
        "complete-bipartite:s=2,t=3",
        "path:n=6",
        "cycle:n=7",
        "star:n=4",
        "ladder:k=4",
        "ternary-tree:k=3",
        "dary-tree:h=3,d=2",
        "grid:rows=3,cols=4",
        "edgeless:n=3",
        {"family": "disjoint-copies", "params": {"k": 3, "base": "cycle:n=4"}},
        {"family": "apex", "params": {"base": "path:n=4"}},
        "grohe:r=2,t=1",
        "grohe:r=1,t=2,d=2",
        {"family": "lcompose", "params": {"d": 2, "base": "path:n=3", "piece": "star:n=2"}},
        {"family": "tower", "params": {"h": 2, "d": 2, "base": "complete:n=2"}},
        {"family": "double-tower", "params": {"h": 2, "d": 1, "base": "path:n=2"}},
        "gadget:k=3,l=4",
    ],
)
def test_build_matches_prediction(spec):  # noqa: D103
    """Every family builds to exactly the predicted vertex and edge counts."""
    built = build_family(spec)
    assert (built.graph.n, built.graph.m) == (built.recipe.vertices, built.recipe.edges), (
        f"{spec} should match its predicted size"
    )


def test_build_size_limit():  # noqa: D103
    """Builds above the vertex cap are refused before any work is done."""
    with pytest.raises(SizeLimit):
        build_family("grohe:r=3,t=3", vertex_cap=1000)
    with pytest.raises(SizeLimit):
        grohe_graph(2, 2, vertex_cap=10)


def test_recipe_json():  # noqa: D103
    """The recipe reports the family, parameters and counts."""
    data = build_family("grohe:r=1,t=1").to_json()
    assert data["family"] == "grohe" and data["n"] == 3 and data["m"] == 2, "G_{1,1} is P3"
    assert data["root"] is not None, "Gluing constructions have a root"


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_grohe_trees(r):  # noqa: D103
    """G_{r,1} is a tree of the predicted size."""
    g = grohe_graph(r, 1).graph
    assert nx.is_tree(g.nx), f"G_{{{r},1}} should be a tree"
    assert (g.n, g.m) == grohe_size(r, 1), f"G_{{{r},1}} should match its predicted size"


def test_grohe_sizes():  # noqa: D103
    """Hand-computed sizes of the first few G_{r,t}."""
    assert grohe_size(0, 5) == (1, 0), "G_{0,t} is K_1"
    assert grohe_size(1, 1) == (3, 2), "G_{1,1} is P3"
    assert grohe_size(2, 1) == (12, 11), "G_{2,1} is a tree on 12 vertices"
    assert grohe_size(1, 2) == (10, 15), "G_{1,2} has 10 vertices and 15 edges"
    assert grohe_size(1, 2, d=1) == (3, 3), "With multiplicity one, G_{1,2} is a triangle"


@pytest.mark.parametrize("r,t", [(1, 1), (1, 2), (2, 1)])
def test_grohe_wcol(r, t):  # noqa: D103
    """wcol_r(G_{r,t}) equals C(r + t, t) on the smallest instances."""
    certificate = wcol_exact(grohe_graph(r, t).graph, r=r)
    assert certificate.exact, "The search should complete"
    assert certificate.value == comb(r + t, t), f"wcol_{r}(G_{{{r},{t}}}) should be C({r + t}, {t})"


@pytest.mark.parametrize("r,t", [(1, 1), (1, 2), (2, 1)])
def test_grohe_rtd2(r, t):  # noqa: D103
    """rtd2(G_{r,t}) = t + 1."""
    assert RootedTwoDepthSolver().value(grohe_graph(r, t).graph) == t + 1, f"rtd2(G_{{{r},{t}}}) should be {t + 1}"


def test_l_compose():  # noqa: D103
    """L_d glues d copies of the piece at every vertex of the base."""
    composed = l_compose(path_graph(2), RootedGraph(path_graph(3), 0), 2)
    assert (composed.graph.n, composed.graph.m) == lcompose_size((2, 1), (3, 2), 2), "Counts should match"
    assert len(composed.copy_maps) == 4, "Two copies for each of the two base vertices"
    with pytest.raises(NullPiece):
        l_compose(Graph(0), RootedGraph(path_graph(3), 0), 1)


def test_towers():  # noqa: D103
    """Towers add one to rtd2; the double tower is two towers sharing the root."""
    solver = RootedTwoDepthSolver()
    for base in (complete_graph(1), path_graph(3)):
        for h, d in ((1, 1), (2, 2)):
            g = tower(base, h, d).graph
            assert (g.n, g.m) == tower_size((base.n, base.m), h, d), "The tower should match its predicted size"
            assert solver.value(g) == solver.value(base) + 1, f"rtd2(T_{{{h},{d}}}) should be rtd2(X) + 1"
    doubled = double_tower(path_graph(2), 2, 1)
    single = tower(path_graph(2), 2, 1)
    assert doubled.graph.n == 2 * single.graph.n - 1, "The two copies share only their root"
    assert len(doubled.halves) == 2, "Both halves should be recorded"
    assert all(half[single.root] == doubled.root for half in doubled.halves), "Both roots map to the shared root"


def test_gadget():  # noqa: D103
    """H_{3,3} separates td2 from rtd2."""
    gadget = gadget_hkl(3, 3)
    assert (gadget.graph.n, gadget.graph.m) == gadget_size(3, 3) == (7, 10), "H_{3,3} has 7 vertices, 10 edges"
    assert gadget.u != gadget.v, "The marked vertices are distinct"
    assert TwoDepthSolver().value(gadget.graph) <= 3, "td2(H_{3,3}) ≤ 3"
    assert RootedTwoDepthSolver().value(gadget.graph) >= 4, "rtd2(H_{3,3}) ≥ 4"
    assert Family.infer_type("GADGET") == Family.GADGET, "Tags are case insensitive"
