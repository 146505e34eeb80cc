"""Test suite for layerings, decompositions, their validation, blocks and canonical forms."""

import networkx as nx
import pytest

from wcol_graphs.constructions.basic import complete_graph, cycle_graph, path_graph, star_graph
from wcol_graphs.errors import BadParams, NotConnected, NullGraph
from wcol_graphs.graph.blocks import block_cut_tree, order_one_separations
from wcol_graphs.graph.canonical import canonical_form
from wcol_graphs.graph.generators import all_graphs, random_partial_ktree, random_spine_tree, random_tree
from wcol_graphs.graph.graph import Graph, is_connected
from wcol_graphs.graph.structures import (
    Layering,
    PathDecomposition,
    StructureKind,
    TreeDecomposition,
    TreePartition,
    bfs_layering,
    path_decomposition_of_ordering,
)
from wcol_graphs.graph.validation import validate_structure


def test_bfs_layering():  # noqa: D103
    """Distance layers from the middle of P5 form a valid layering."""
    layering = bfs_layering(path_graph(5), 2)
    assert layering.parts == (frozenset({2}), frozenset({1, 3}), frozenset({0, 4})), "Unexpected layers"
    assert validate_structure(path_graph(5), layering).valid, "A BFS layering should be valid"
    with pytest.raises(NotConnected):
        bfs_layering(Graph.from_edges(3, [(0, 1)]), 0)


def test_layering_violations():  # noqa: D103
    """An edge between layers 0 and 2 and a missing scope vertex are both reported."""
    layering = Layering.of([{0}, {2}, {1}])
    report = validate_structure(path_graph(3), layering, scope=[0, 1, 2])
    assert not report.valid, "The layering should be rejected"
    assert report.violations[0].clause == "edge spans non-consecutive layers", "The spanning edge should be named"

    report = validate_structure(path_graph(3), Layering.of([{0}, {1}]), scope=[0, 1, 2])
    assert [v.clause for v in report.violations] == ["scope vertex in no part"], "Vertex 2 should be missing"


def test_tree_partition():  # noqa: D103
    """Parts of a tree partition may only be joined along tree edges."""
    partition = TreePartition.of(path_graph(2), [{0, 1}, {2, 3}])
    assert validate_structure(cycle_graph(4), partition).valid, "C4 should split into two adjacent parts"
    partition = TreePartition.of(path_graph(3), [{0}, {1, 3}, {2}])
    report = validate_structure(cycle_graph(4), partition)
    assert report.valid, "Parts 0 and 2 are not joined by any edge of C4"


def test_path_decomposition_of_ordering():  # noqa: D103
    """The sorted ordering of a path gives a natural decomposition of width one."""
    pd = path_decomposition_of_ordering(path_graph(5), range(5))
    report = validate_structure(path_graph(5), pd, natural=True)
    assert report.valid, "The decomposition should be valid"
    assert report.width == 1, "A path has width one along its natural ordering"
    assert report.natural is True, "Every side of a path decomposition of a path is connected"
    assert report.kind == StructureKind.PATH_DECOMPOSITION, "The kind should be inferred"


def test_tree_decomposition_violations():  # noqa: D103
    """A decomposition missing the closing edge of C4 is rejected."""
    dec = TreeDecomposition.of(path_graph(3), [{0, 1}, {1, 2}, {2, 3}])
    report = validate_structure(cycle_graph(4), dec)
    assert [v.clause for v in report.violations] == ["edge in no bag"], "Edge 0-3 should be in no bag"

    dec = TreeDecomposition.of(path_graph(3), [{0, 1}, {1, 2}, {0, 2}])
    report = validate_structure(path_graph(3), dec)
    assert "occurrence set is disconnected" in [v.clause for v in report.violations], "Vertex 0 should be split"


def test_trivial_decomposition_and_json():  # noqa: D103
    """The one-bag decomposition has width n - 1 and survives a JSON round trip."""
    dec = TreeDecomposition.trivial(complete_graph(4))
    assert dec.width == 3, "One bag of four vertices has width three"
    assert TreeDecomposition.from_json(dec.to_json()) == dec, "The decomposition should survive JSON"
    assert PathDecomposition.of([{0}, set(), {1}]).without_empty_bags().bags == (
        frozenset({0}),
        frozenset({1}),
    ), "Empty bags should be dropped"


def test_random_partial_ktree(rng):  # noqa: D103
    """Random partial k-trees come with a valid decomposition of width at most k."""
    for _ in range(10):
        g, dec = random_partial_ktree(12, 3, rng)
        report = validate_structure(g, dec)
        assert report.valid, f"Invalid decomposition: {report.violations}"
        assert dec.width <= 3, "The decomposition should have width at most three"
        assert is_connected(g), "Partial k-trees are connected by default"


def test_generators(rng):  # noqa: D103
    """Exhaustive generation counts every labelled graph; random trees are trees."""
    assert sum(1 for _ in all_graphs(4)) == 64, "There are 2^6 labelled graphs on four vertices"
    assert nx.is_tree(random_tree(30, rng).nx), "A random tree should be a tree"
    spine_tree = random_spine_tree(40, 25, rng)
    assert nx.is_tree(spine_tree.nx), "A spine tree should be a tree"
    assert nx.shortest_path_length(spine_tree.nx, 0, 24) == 24, "Vertices 0 to 24 form the spine"
    with pytest.raises(BadParams):
        random_spine_tree(5, 6, rng)


def test_block_cut_tree():  # noqa: D103
    """P3 has two blocks meeting in the cut vertex 1."""
    tree = block_cut_tree(path_graph(3))
    assert tree.blocks == (frozenset({0, 1}), frozenset({1, 2})), "The blocks should be the two edges"
    assert tree.cut_vertices == frozenset({1}), "The middle vertex is the only cut vertex"
    assert tree.leaf_blocks() == [(0, 1), (1, 1)], "Both blocks are leaves attached at 1"
    assert tree.incidence == ((0, 1), (1, 1)), "Each block meets the cut vertex once"
    with pytest.raises(NotConnected):
        block_cut_tree(Graph.from_edges(2, []))


def test_order_one_separations():  # noqa: D103
    """Every returned separation has order at most one and a block on its B side."""
    for g in [path_graph(2), star_graph(3), cycle_graph(4), Graph.from_edges(3, [(0, 1)])]:
        separations = order_one_separations(g)
        assert separations, f"{g} should have a separation of order at most one"
        for separation in separations:
            assert separation.is_valid_for(g), f"{separation} is not a separation of {g}"
            assert separation.side_b - separation.side_a, "B∖A should be nonnull"
    assert order_one_separations(complete_graph(1)) == [], "K1 has no proper separation"
    with pytest.raises(NullGraph):
        order_one_separations(Graph.from_edges(0, []))


def test_canonical_form():  # noqa: D103
    """Isomorphic graphs share their canonical form; large graphs are left out."""
    relabelled = Graph.from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert canonical_form(relabelled) == canonical_form(cycle_graph(4)), "Both graphs are C4"
    assert canonical_form(path_graph(4)) != canonical_form(cycle_graph(4)), "P4 is not C4"
    assert canonical_form(cycle_graph(5), vertices=[0, 1, 2]) == canonical_form(path_graph(3)), "C5[012] is P3"
    assert canonical_form(complete_graph(13)) is None, "Graphs above the vertex cap are not canonicalised"
