"""Graph sweeps and seeded random inputs shared by the suites."""

from collections.abc import Iterator

import numpy as np

from wcol_graphs.graph.canonical import canonical_form
from wcol_graphs.graph.generators import all_graphs
from wcol_graphs.graph.graph import Graph
from wcol_graphs.minors.model import SubgraphFamily
from wcol_graphs.orderings.ordering import Ordering


def isomorphism_classes(n: int, min_edges: int = 0) -> Iterator[Graph]:
    """One labelled representative of every isomorphism class of graphs on n vertices, in edge-mask order."""
    seen = set()
    for g in all_graphs(n):
        if g.m < min_edges:
            continue
        form = canonical_form(g, vertex_cap=max(n, 1))
        if form is not None:
            if form in seen:
                continue
            seen.add(form)
        yield g


def random_subset(vertices: range | list[int], rng: np.random.Generator, probability: float = 0.5) -> frozenset[int]:
    return frozenset(v for v in vertices if rng.random() < probability)


def random_ordering(scope: frozenset[int], rng: np.random.Generator) -> Ordering:
    members = sorted(scope)
    return Ordering(tuple(members[i] for i in rng.permutation(len(members))))


def random_connected_set(g: Graph, size: int, rng: np.random.Generator) -> frozenset[int]:
    """Grow a connected vertex set of at most `size` vertices from a random start vertex."""
    grown = {int(rng.integers(0, g.n))}
    while len(grown) < size:
        frontier = sorted(g.neighborhood(grown))
        if not frontier:
            break
        grown.add(frontier[int(rng.integers(0, len(frontier)))])
    return frozenset(grown)


def random_family(g: Graph, members: int, rng: np.random.Generator, max_member: int = 3) -> SubgraphFamily:
    """A family of random connected subgraphs of a nonnull graph."""
    return SubgraphFamily.of(
        random_connected_set(g, int(rng.integers(1, max_member + 1)), rng) for _ in range(members)
    )
