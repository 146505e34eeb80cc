"""Weak r-reachability and the evaluation of wcol_r(G, S, σ)."""

from collections.abc import Collection
from dataclasses import replace

import networkx as nx

from wcol_graphs.errors import BadParams, ScopeMismatch
from wcol_graphs.graph.graph import Graph
from wcol_graphs.orderings.ordering import Ordering, WcolCertificate


def check_scope(g: Graph, scope: Collection[int], sigma: Ordering | None = None) -> frozenset[int]:
    """Validate that S ⊆ V(G) and that σ ranges exactly over S."""
    scope = frozenset(scope)
    outside = [v for v in scope if not (isinstance(v, int) and 0 <= v < g.n)]
    if outside:
        raise ScopeMismatch(f"scope vertex {min(outside)} is not a vertex of a graph on {g.n} vertices")
    if sigma is not None and sigma.scope != scope:
        raise ScopeMismatch(f"ordering covers {len(sigma.scope)} vertices, scope has {len(scope)}")
    return scope


def reach_of(g: Graph, v: int, blocked: Collection[int], r: int) -> frozenset[int]:
    """Vertices u with a u-v path of length ≤ r avoiding `blocked` (v itself is never blocked)."""
    view = nx.restricted_view(g.nx, [w for w in blocked if w != v], [])
    return frozenset(nx.single_source_shortest_path_length(view, v, cutoff=r))


def wreach_sets(g: Graph, scope: Collection[int], sigma: Ordering, r: int) -> dict[int, frozenset[int]]:
    """WReach_r[G, S, σ, u] for every vertex u of G.

    For each v ∈ S the vertices σ-before v are deleted and a breadth-first search of radius r from v collects the
    vertices that weakly reach v.

    Args:
        g (Graph): The graph; paths may use any of its vertices.
        scope (Collection[int]): The ordered scope S.
        sigma (Ordering): An ordering of exactly S.
        r (int): The radius.

    Returns:
        dict[int, frozenset[int]]: The weak reachability set of every vertex (empty for most u ∉ S-neighbourhoods).
    """
    check_scope(g, scope, sigma)
    if r < 0:
        raise BadParams(f"radius must be nonnegative, got {r}")
    reached: dict[int, set[int]] = {u: set() for u in g.vertices}
    for i, v in enumerate(sigma.sequence):
        for u in reach_of(g, v, sigma.sequence[:i], r):
            reached[u].add(v)
    return {u: frozenset(vs) for u, vs in reached.items()}


def wcol_of_ordering(g: Graph, scope: Collection[int], sigma: Ordering, r: int) -> WcolCertificate:
    """wcol_r(G, S, σ) with the smallest vertex attaining it as witness."""
    sets = wreach_sets(g, scope, sigma, r)
    if not sets:
        return WcolCertificate(r, 0, sigma, None, frozenset())
    witness = min(sets, key=lambda u: (-len(sets[u]), u))
    return WcolCertificate(r, len(sets[witness]), sigma, witness, sets[witness])


def replay_wcol(g: Graph, certificate: WcolCertificate) -> WcolCertificate:
    """Re-evaluate a certificate's ordering; the result's value must equal the certificate's."""
    evaluated = wcol_of_ordering(g, certificate.ordering.scope, certificate.ordering, certificate.r)
    return replace(evaluated, exact=certificate.exact)
