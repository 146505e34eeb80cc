"""Canonical forms of small induced subgraphs, used as memoization keys.

Colour refinement is followed by individualisation of the first non-singleton cell, branching on every vertex
of that cell except twins of an already tried vertex. The certificate is the lexicographically smallest edge
list over all leaves of the search, so isomorphic inputs produce identical certificates.
"""

from __future__ import annotations

from collections.abc import Collection

from wcol_graphs.graph.graph import Graph

Certificate = tuple[int, tuple[tuple[int, int], ...]]


class _LeafCapReached(Exception):
    pass


def vertex_mask(vertices: Collection[int]) -> int:
    """Bit mask of a vertex set, a cheap exact key for subsets of one fixed graph."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def _refine(adjacency: dict[int, frozenset[int]], colour: dict[int, int]) -> dict[int, int]:
    """Refine an ordered colouring until equitable; colour ids are ranks of invariant signatures."""
    while True:
        signature = {v: (colour[v], tuple(sorted(colour[w] for w in adjacency[v]))) for v in adjacency}
        ranks = {s: i for i, s in enumerate(sorted(set(signature.values())))}
        refined = {v: ranks[signature[v]] for v in adjacency}
        if len(ranks) == len(set(colour.values())):
            return refined
        colour = refined


def _twin_representatives(adjacency: dict[int, frozenset[int]], cell: list[int]) -> list[int]:
    """One vertex per class of (true or false) twins inside the cell."""
    kept: list[int] = []
    for v in cell:
        if not any(adjacency[v] - {u} == adjacency[u] - {v} for u in kept):
            kept.append(v)
    return kept


def canonical_form(
    g: Graph, vertices: Collection[int] | None = None, vertex_cap: int = 12, leaf_cap: int = 5000
) -> Certificate | None:
    """Isomorphism-invariant certificate of the induced subgraph G[vertices].

    Args:
        g (Graph): The host graph.
        vertices (Collection[int] | None): The induced vertex set; all of g when omitted.
        vertex_cap (int): Larger subgraphs are not canonicalised.
        leaf_cap (int): Give up when the individualisation tree has more leaves than this.

    Returns:
        Certificate | None: (vertex count, sorted canonical edge list), or None when a cap was hit.
    """
    members = sorted(g.vertices if vertices is None else vertices)
    if len(members) > vertex_cap:
        return None
    inside = set(members)
    adjacency = {v: g.adjacency[v] & inside for v in members}
    best: list[tuple] = []
    leaves = [0]

    def search(colour: dict[int, int]) -> None:
        colour = _refine(adjacency, colour)
        cells: dict[int, list[int]] = {}
        for v in members:
            cells.setdefault(colour[v], []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            leaves[0] += 1
            if leaves[0] > leaf_cap:
                raise _LeafCapReached
            labelled = ((colour[u], colour[v]) for u in members for v in adjacency[u] if u < v)
            edges = tuple(sorted((min(a, b), max(a, b)) for a, b in labelled))
            if not best or edges < best[0]:
                best[:] = [edges]
            return
        for v in _twin_representatives(adjacency, target):
            # v keeps its cell's position, the rest of the cell moves just behind it
            individualised = {w: 2 * colour[w] + (1 if colour[w] == colour[v] and w != v else 0) for w in members}
            search(individualised)

    try:
        search({v: len(adjacency[v]) for v in members})
    except _LeafCapReached:
        return None
    return len(members), best[0] if best else ()
