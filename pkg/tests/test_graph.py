"""Test suite for the graph module: construction, surgery, distances and geodesics."""

import pytest

from wcol_graphs.constructions.basic import complete_graph, cycle_graph, path_graph
from wcol_graphs.errors import EmptyEndpointSet, LoopEdge, NotAPartition, VertexOutOfRange
from wcol_graphs.graph.graph import (
    Graph,
    apex,
    ball,
    components,
    contract_edge,
    delete_edge,
    delete_vertices,
    disjoint_union,
    geodesic,
    induced_subgraph,
    is_connected,
    quotient,
)


def test_from_edges_normalizes():  # noqa: D103
    """Edges given in either orientation collapse onto one normalized edge."""
    g = Graph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == frozenset({(0, 1), (1, 2)}), "Edges should be stored as (u, v) with u < v"
    assert g.m == 2, "Repeated edges should collapse"
    assert g.neighbors(1) == frozenset({0, 2}), "Vertex 1 should be adjacent to 0 and 2"


@pytest.mark.parametrize(
    "n,edges,error",
    [
        (2, [(1, 1)], LoopEdge),
        (2, [(0, 2)], VertexOutOfRange),
        (-1, [], VertexOutOfRange),
    ],
)
def test_invalid_graphs(n, edges, error):  # noqa: D103
    """Loops, out-of-range endpoints and negative vertex counts are rejected."""
    with pytest.raises(error):
        Graph.from_edges(n, edges)


def test_null_graph(null_graph):  # noqa: D103
    """The null graph has no vertices and counts as disconnected."""
    assert null_graph.n == 0 and null_graph.m == 0, "The null graph should be empty"
    assert not is_connected(null_graph), "The null graph should not be connected"
    assert components(null_graph) == [], "The null graph should have no components"


def test_induced_subgraph_relabels():  # noqa: D103
    """Induced subgraphs are relabelled in increasing order of the old labels."""
    g, old_to_new = induced_subgraph(cycle_graph(5), [4, 0, 1])
    assert old_to_new == {0: 0, 1: 1, 4: 2}, "Old labels should map to 0..k-1 in increasing order"
    assert g.edges == frozenset({(0, 1), (0, 2)}), "The edges 0-1 and 4-0 should survive"


def test_delete_vertices_and_edges():  # noqa: D103
    """Deleting a cut vertex splits a path; deleting a non-edge is an error."""
    g, _ = delete_vertices(path_graph(5), [2])
    assert components(g) == [frozenset({0, 1}), frozenset({2, 3})], "P5 - 2 should be two copies of P2"
    assert delete_edge(path_graph(3), 1, 0).edges == frozenset({(1, 2)}), "Edge 0-1 should be removed"
    with pytest.raises(VertexOutOfRange):
        delete_edge(path_graph(3), 0, 2)


def test_contract_edge():  # noqa: D103
    """Contracting an edge of P3 gives P2 and maps both endpoints onto one vertex."""
    g, old_to_new = contract_edge(path_graph(3), 0, 1)
    assert g.n == 2 and g.edges == frozenset({(0, 1)}), "P3 / 01 should be P2"
    assert old_to_new[0] == old_to_new[1] == 0, "The contracted endpoints should share a label"
    assert old_to_new[2] == 1, "The other vertex should be compacted"


def test_disjoint_union_and_apex():  # noqa: D103
    """Union offsets the labels of later graphs; the apex is vertex 0."""
    union, maps = disjoint_union(path_graph(2), path_graph(3))
    assert union.n == 5 and union.m == 3, "P2 ⊔ P3 should have 5 vertices and 3 edges"
    assert maps[1] == {0: 2, 1: 3, 2: 4}, "The second graph should start at label 2"
    g, old_to_new = apex(path_graph(3))
    assert g.n == 4 and g.m == 5, "K1 ⊕ P3 should have 4 vertices and 5 edges"
    assert g.neighbors(0) == frozenset({1, 2, 3}), "The apex should see every old vertex"
    assert old_to_new == {0: 1, 1: 2, 2: 3}, "Old vertices should shift by one"


def test_ball():  # noqa: D103
    """Balls are closed and a negative radius is rejected."""
    assert ball(path_graph(5), 2, 1) == frozenset({1, 2, 3}), "N^1[2] of P5 should be {1, 2, 3}"
    assert ball(path_graph(5), 0, 0) == frozenset({0}), "The radius-0 ball is the centre"
    with pytest.raises(VertexOutOfRange):
        ball(path_graph(5), 0, -1)


@pytest.mark.parametrize(
    "g,from_set,to_set,expected",
    [
        (path_graph(5), {0}, {4}, (0, 1, 2, 3, 4)),
        (cycle_graph(4), {0}, {2}, (0, 1, 2)),
        (path_graph(5), {0, 2}, {4}, (2, 3, 4)),
        (complete_graph(3), {1, 2}, {2, 0}, (2,)),
        (Graph.from_edges(4, [(0, 1), (2, 3)]), {0}, {3}, None),
    ],
)
def test_geodesic(g, from_set, to_set, expected):  # noqa: D103
    """Geodesics are shortest, avoid X ∪ Y internally and are lexicographically smallest."""
    assert geodesic(g, from_set, to_set) == expected, f"Unexpected geodesic from {from_set} to {to_set}"


def test_geodesic_empty_endpoint():  # noqa: D103
    """Empty endpoint sets are rejected."""
    with pytest.raises(EmptyEndpointSet):
        geodesic(path_graph(3), set(), {1})


def test_quotient():  # noqa: D103
    """Quotients contract every part to one vertex, and reject non-partitions."""
    assert quotient(cycle_graph(4), [{0, 1}, {2, 3}]) == complete_graph(2), "C4 / {01, 23} should be K2"
    with pytest.raises(NotAPartition):
        quotient(cycle_graph(4), [{0, 1}, {1, 2, 3}])
    with pytest.raises(NotAPartition):
        quotient(cycle_graph(4), [{0, 1}, {2}])
