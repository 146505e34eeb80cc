"""Exhaustive and seeded random graph generators for sweeps and property checks."""

from collections.abc import Iterator
from itertools import combinations

import networkx as nx
import numpy as np

from wcol_graphs.errors import BadParams
from wcol_graphs.graph.graph import Graph
from wcol_graphs.graph.structures import TreeDecomposition


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on vertices 0..n-1 (2^(n choose 2) of them), in increasing edge-mask order."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(pair for i, pair in enumerate(pairs) if mask >> i & 1))


def all_graphs_up_to(max_n: int, min_edges: int = 0) -> Iterator[Graph]:
    """Every labelled graph on at most max_n vertices with at least `min_edges` edges, smallest first."""
    for n in range(max_n + 1):
        for g in all_graphs(n):
            if g.m >= min_edges:
                yield g


def make_rng(seed: int | np.random.Generator | None) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdős-Rényi G(n, p)."""
    return Graph(n, frozenset(pair for pair in combinations(range(n), 2) if rng.random() < p))


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """A random recursive tree: vertex v > 0 attaches to a uniform earlier vertex."""
    return Graph.from_edges(n, ((int(rng.integers(0, v)), v) for v in range(1, n)))


def random_spine_tree(n: int, spine: int, rng: np.random.Generator) -> Graph:
    """The path 0 - 1 - ... - (spine - 1), with every later vertex attached to a uniform earlier vertex."""
    if not 1 <= spine <= n:
        raise BadParams(f"a spine of {spine} vertices does not fit into {n} vertices")
    edges = [(v - 1, v) for v in range(1, spine)]
    edges.extend((int(rng.integers(0, v)), v) for v in range(spine, n))
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """A random tree with extra G(n, p) edges on top."""
    tree = random_tree(n, rng)
    return Graph(n, tree.edges | random_graph(n, p, rng).edges)


def random_partial_ktree(
    n: int, k: int, rng: np.random.Generator, keep_probability: float = 0.6, connected: bool = True
) -> tuple[Graph, TreeDecomposition]:
    """A random graph of treewidth ≤ k together with a tree decomposition of width ≤ k.

    A random k-tree is grown by attaching every new vertex to a k-clique of an existing bag; each k-tree edge is
    then kept with `keep_probability`. With `connected`, dropped edges are added back where needed to connect the
    graph, which keeps the decomposition valid.

    Args:
        n (int): Number of vertices.
        k (int): Width bound.
        rng (np.random.Generator): Random source.
        keep_probability (float): Probability of keeping a k-tree edge.
        connected (bool): Whether the result must be connected.

    Returns:
        tuple[Graph, TreeDecomposition]: The graph and its decomposition.
    """
    base = min(n, k + 1)
    bags: list[frozenset[int]] = [frozenset(range(base))]
    tree_edges: list[tuple[int, int]] = []
    ktree_edges = set(combinations(range(base), 2))
    for v in range(base, n):
        node = int(rng.integers(0, len(bags)))
        bag = sorted(bags[node])
        clique = frozenset(bag) if len(bag) <= k else frozenset(rng.choice(bag, size=k, replace=False).tolist())
        ktree_edges.update((u, v) for u in clique)
        bags.append(clique | {v})
        tree_edges.append((node, len(bags) - 1))

    kept = {edge for edge in sorted(ktree_edges) if rng.random() < keep_probability}
    if connected:
        forest = nx.utils.UnionFind(range(n))
        for u, v in kept:
            forest.union(u, v)
        candidates = sorted(ktree_edges)
        for index in rng.permutation(len(candidates)):
            u, v = candidates[index]
            if forest[u] != forest[v]:
                forest.union(u, v)
                kept.add((u, v))
    tree = Graph.from_edges(len(bags), tree_edges)
    return Graph.from_edges(n, kept), TreeDecomposition(tree, tuple(bags))
