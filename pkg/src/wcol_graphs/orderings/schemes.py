"""Constructive ordering schemes: tree elimination orderings, dyadic path orderings, pathwidth orderings and
prefix composition.
"""

from __future__ import annotations

import logging
from collections.abc import Collection, Iterable, Sequence

import networkx as nx

from wcol_graphs.errors import InvalidDecomposition, NotAPath, NotConnected, NotATree, RadiusZero, RootOutOfRange
from wcol_graphs.graph.graph import Graph, components, geodesic, induced_subgraph
from wcol_graphs.graph.structures import PathDecomposition
from wcol_graphs.graph.validation import validate_structure
from wcol_graphs.orderings.ordering import Ordering

logger = logging.getLogger(__name__)


def elimination_ordering(t: Graph, s: int) -> Ordering:
    """Breadth-first ordering of a tree from its root s: every vertex comes after its parent.

    Under this ordering WReach_r[T, σ, u] only contains ancestors of u at distance ≤ r, so wcol_r ≤ r + 1.

    Raises:
        NotATree: If t is not a tree.
        RootOutOfRange: If s is not a vertex of t.
    """
    if t.n == 0 or not nx.is_tree(t.nx):
        raise NotATree("elimination_ordering needs a tree")
    if not 0 <= s < t.n:
        raise RootOutOfRange(f"root {s} is not a vertex of a tree on {t.n} vertices")
    order = [s]
    for _, child in nx.bfs_edges(t.nx, s, sort_neighbors=sorted):
        order.append(child)
    return Ordering(tuple(order))


def path_sequence(p: Graph) -> tuple[int, ...]:
    """The vertices of a path from its smaller-labelled end to the other end.

    Raises:
        NotAPath: If p is not a path.
    """
    if p.n == 0 or p.m != p.n - 1 or any(p.degree(v) > 2 for v in p.vertices) or not nx.is_connected(p.nx):
        raise NotAPath("expected a path")
    if p.n == 1:
        return (0,)
    start = min(v for v in p.vertices if p.degree(v) == 1)
    sequence = [start]
    previous = None
    while len(sequence) < p.n:
        current = sequence[-1]
        following = next(w for w in p.neighbors(current) if w != previous)
        previous = current
        sequence.append(following)
    return tuple(sequence)


def ceil_log2(x: int) -> int:
    """⌈log2 x⌉ for x ≥ 1."""
    return (x - 1).bit_length()


def dyadic_level(position: int, s: int) -> int:
    """The largest j ≤ s with 2^j dividing the 1-based position."""
    level = 0
    while level < s and position % (1 << (level + 1)) == 0:
        level += 1
    return level


def dyadic_path_ordering(p: Graph, r: int, s: int | None = None) -> Ordering:
    """Dyadic ordering of a path: higher levels first, left to right within a level.

    Position i (counted from 1 along the path) gets level max{j ≤ s : 2^j | i}. With 2^s ≥ r, every vertex weakly
    r-reaches at most two vertices per level below the top and at most two at the top, giving wcol_r ≤ 2 + s.

    Args:
        p (Graph): A path.
        r (int): The radius, at least 1.
        s (int | None): Number of levels; defaults to ⌈log2 r⌉. ⌈log2 (r + 1)⌉ is the other common choice.

    Returns:
        Ordering: The ordering of all vertices of p.
    """
    if r < 1:
        raise RadiusZero("dyadic_path_ordering needs r ≥ 1")
    sequence = path_sequence(p)
    levels = ceil_log2(r) if s is None else s
    keyed = sorted(range(1, len(sequence) + 1), key=lambda i: (-dyadic_level(i, levels), i))
    return Ordering(tuple(sequence[i - 1] for i in keyed))


def _mapped(bags, old_to_new: dict[int, int]) -> PathDecomposition:
    """Bags restricted to the renamed vertices and expressed in their new names."""
    return PathDecomposition(tuple(frozenset(old_to_new[v] for v in bag if v in old_to_new) for bag in bags))


def _pathwidth_sequence(g: Graph, pd: PathDecomposition) -> list[int]:
    """Recursive part of pathwidth_ordering on a connected graph, in the labels of g."""
    bags = pd.without_empty_bags().bags
    if g.m == 0:
        return list(g.vertices)
    path = geodesic(g, bags[0], bags[-1])
    if path is None:
        raise NotConnected("pathwidth recursion reached a disconnected piece")
    removed = set(path)
    sequence = list(path)
    remainder, old_to_new = induced_subgraph(g, [v for v in g.vertices if v not in removed])
    new_to_old = {new: old for old, new in old_to_new.items()}
    remainder_pd = _mapped(bags, old_to_new)
    for component in components(remainder):
        piece, to_piece = induced_subgraph(remainder, component)
        from_piece = {new: old for old, new in to_piece.items()}
        inner = _pathwidth_sequence(piece, _mapped(remainder_pd.bags, to_piece))
        sequence.extend(new_to_old[from_piece[v]] for v in inner)
    return sequence


def pathwidth_ordering(g: Graph, pd: PathDecomposition, r: int | None = None) -> Ordering:
    """Ordering with wcol_r ≤ 1 + width(pd)·(2r + 1) for every r.

    A shortest path Q from the first bag to the last bag meets every bag, so deleting V(Q) lowers the width; Q is
    placed first and the construction recurses on the components of G - V(Q). The ordering does not depend on r.

    Args:
        g (Graph): The graph.
        pd (PathDecomposition): A valid path decomposition of g.
        r (int | None): Accepted for symmetry with the other schemes.

    Returns:
        Ordering: An ordering of all vertices of g.
    """
    report = validate_structure(g, pd)
    if not report.valid:
        raise InvalidDecomposition("; ".join(str(v) for v in report.violations[:3]))
    sequence: list[int] = []
    for component in components(g):
        piece, to_piece = induced_subgraph(g, component)
        from_piece = {new: old for old, new in to_piece.items()}
        sequence.extend(from_piece[v] for v in _pathwidth_sequence(piece, _mapped(pd.bags, to_piece)))
    logger.debug("pathwidth ordering of %d vertices from a width-%d decomposition", g.n, pd.width)
    return Ordering(tuple(sequence))


def prepend_sets(g: Graph, base_sigma: Ordering, prefixes: Sequence[Iterable[int] | Collection[int]]) -> Ordering:
    """Place the prefixes (in order) before base_sigma; vertices already placed earlier are skipped.

    A prefix given as a sequence (a geodesic, say) keeps its order; a set is placed in increasing order.
    """
    placed: list[int] = []
    seen: set[int] = set()
    for prefix in [*prefixes, base_sigma.sequence]:
        items = sorted(prefix) if isinstance(prefix, (set, frozenset)) else list(prefix)
        for v in items:
            g.check_vertex(v)
            if v not in seen:
                seen.add(v)
                placed.append(v)
    return Ordering(tuple(placed))
