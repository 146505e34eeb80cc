"""Pytest configuration file."""

import pytest

from wcol_graphs.constructions.basic import complete_graph, cycle_graph, path_graph, star_graph
from wcol_graphs.graph.generators import make_rng
from wcol_graphs.graph.graph import Graph

TEST_SEED = 20240917


@pytest.fixture
def rng():
    """A seeded random generator, fresh for every test."""
    return make_rng(TEST_SEED)


@pytest.fixture
def null_graph() -> Graph:
    """The graph without vertices."""
    return Graph.from_edges(0, [])


@pytest.fixture
def small_graphs() -> dict[str, Graph]:
    """A handful of named graphs with well known parameters."""
    return {
        "K1": complete_graph(1),
        "K4": complete_graph(4),
        "P3": path_graph(3),
        "P5": path_graph(5),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "star4": star_graph(4),
        "edgeless3": Graph.from_edges(3, []),
    }
