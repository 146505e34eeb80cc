"""Tree-decomposition tools: the Helly-type hit-or-pack dichotomy and interface shrinking.

For a family of connected subgraphs and a tree decomposition rooted at node 0, every member touches a connected
set of tree nodes with a unique node closest to the root, its top. Taking the member whose top is deepest and
adding the bag of that top hits every member through that bag; repeating on the members still unhit either
collects d pairwise disjoint members or hits the family with fewer than d bags.
"""

from __future__ import annotations

import logging
from collections.abc import Collection, Sequence
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from wcol_graphs.errors import BadParams, InvalidDecomposition
from wcol_graphs.graph.graph import Graph, components, delete_vertices
from wcol_graphs.graph.structures import TreeDecomposition
from wcol_graphs.graph.validation import Violation, validate_structure
from wcol_graphs.minors.model import SubgraphFamily

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Pack:
    """d pairwise disjoint members, by family index."""

    members: tuple[int, ...]

    def to_json(self) -> dict:
        return {"arm": "pack", "members": list(self.members)}


@dataclass(frozen=True)
class Hit:
    """A hitting set made of at most d - 1 bags: the bag nodes and the union of their bags."""

    nodes: tuple[int, ...]
    vertices: frozenset[int]

    def to_json(self) -> dict:
        return {"arm": "hit", "nodes": list(self.nodes), "vertices": sorted(self.vertices)}


def check_decomposition(host: Graph, dec: TreeDecomposition) -> None:
    """Raise InvalidDecomposition with the first failed clause."""
    report = validate_structure(host, dec)
    if not report.valid:
        raise InvalidDecomposition(str(report.violations[0]))


def node_depths(dec: TreeDecomposition) -> dict[int, int]:
    """Depth of every tree node, with the tree rooted at node 0."""
    return nx.single_source_shortest_path_length(dec.tree.nx, 0)


def greedy_hit_or_pack(
    bags: Sequence[frozenset[int]], depth: dict[int, int], members: Sequence[frozenset[int]], d: int
) -> tuple[list[int], list[int]]:
    """Deepest-top greedy on raw bags; returns (picked member positions, bag nodes taken).

    Ties between tops of equal depth go to the smaller node, then to the earlier member.
    """
    tops = {}
    for i, member in enumerate(members):
        touched = [x for x, bag in enumerate(bags) if bag & member]
        tops[i] = min(touched, key=lambda x: (depth[x], x))
    remaining = list(range(len(members)))
    picked: list[int] = []
    nodes: list[int] = []
    while remaining and len(picked) < d:
        chosen = min(remaining, key=lambda i: (-depth[tops[i]], tops[i], i))
        node = tops[chosen]
        picked.append(chosen)
        nodes.append(node)
        remaining = [i for i in remaining if not (members[i] & bags[node])]
    return picked, nodes


def helly_hit_or_pack(host: Graph, dec: TreeDecomposition, family: SubgraphFamily, d: int) -> Pack | Hit:
    """Either d pairwise disjoint members of the family, or a set meeting every member inside ≤ d - 1 bags.

    Args:
        host (Graph): The host graph.
        dec (TreeDecomposition): A tree decomposition of the host.
        family (SubgraphFamily): Connected subgraphs of the host.
        d (int): At least 1.

    Returns:
        Pack | Hit: Exactly one of the two arms.

    Raises:
        InvalidDecomposition: If dec is not a tree decomposition of the host.
        BadParams: If d < 1.
    """
    if d < 1:
        raise BadParams(f"helly_hit_or_pack needs d ≥ 1, got {d}")
    check_decomposition(host, dec)
    picked, nodes = greedy_hit_or_pack(dec.bags, node_depths(dec), family.members, d)
    if len(picked) == d:
        logger.debug("packed %d disjoint members", d)
        return Pack(tuple(picked))
    return Hit(tuple(nodes), dec.union_of(nodes))


def check_hit_or_pack(dec: TreeDecomposition, family: SubgraphFamily, d: int, outcome: Pack | Hit) -> list[Violation]:
    """The certificate of the returned arm: disjoint members for Pack, a hitting union of ≤ d - 1 bags for Hit."""
    violations = []
    if isinstance(outcome, Pack):
        if len(outcome.members) != d:
            violations.append(Violation("pack does not have d members", (len(outcome.members), d)))
        for i, j in combinations(outcome.members, 2):
            if family.members[i] & family.members[j]:
                violations.append(Violation("packed members intersect", (i, j)))
    else:
        if len(outcome.nodes) > d - 1:
            violations.append(Violation("hit uses more than d - 1 bags", outcome.nodes))
        if outcome.vertices != dec.union_of(outcome.nodes):
            violations.append(Violation("hit set is not the union of its bags", outcome.nodes))
        for i, member in enumerate(family.members):
            if not member & outcome.vertices:
                violations.append(Violation("member not hit", (i,)))
    return violations


def steiner_branch_nodes(tree: Graph, terminals: Collection[int]) -> frozenset[int]:
    """Non-terminal nodes of degree ≥ 3 in the smallest subtree containing the terminals."""
    kept = set(tree.vertices)
    degree = {x: tree.degree(x) for x in kept}
    leaves = [x for x in kept if degree[x] <= 1 and x not in terminals]
    while leaves:
        x = leaves.pop()
        kept.discard(x)
        for y in tree.neighbors(x):
            if y in kept:
                degree[y] -= 1
                if degree[y] == 1 and y not in terminals:
                    leaves.append(y)
    return frozenset(x for x in kept if x not in terminals and degree[x] >= 3)


def shrink_interfaces(host: Graph, dec: TreeDecomposition, y_nodes: Collection[int]) -> tuple[int, ...]:
    """Extend m tree nodes by the branch nodes of their Steiner tree, giving at most 2m - 1 nodes.

    Every component of the host minus the union of the resulting bags then has its neighbourhood inside the
    bags of the at most two chosen nodes next to its tree segment.

    Raises:
        InvalidDecomposition: If dec is not a tree decomposition of the host.
        BadParams: If y_nodes is empty or names a node outside the tree.
    """
    check_decomposition(host, dec)
    terminals = frozenset(y_nodes)
    if not terminals:
        raise BadParams("shrink_interfaces needs at least one tree node")
    if any(not 0 <= x < dec.tree.n for x in terminals):
        raise BadParams(f"tree nodes must be in 0..{dec.tree.n - 1}")
    x_nodes = tuple(sorted(terminals | steiner_branch_nodes(dec.tree, terminals)))
    logger.debug("interface nodes %s grown to %s", sorted(terminals), x_nodes)
    return x_nodes


def verify_interfaces(host: Graph, dec: TreeDecomposition, x_nodes: Collection[int]) -> list[Violation]:
    """Check the two-bag property for every component of host - ⋃ bags(x_nodes).

    When dec is natural, also check that N(V(C)) meets at most two components of host - V(C).
    """
    violations: list[Violation] = []
    removed = dec.union_of(x_nodes)
    rest, old_to_new = delete_vertices(host, removed)
    new_to_old = {new: old for old, new in old_to_new.items()}
    natural = bool(validate_structure(host, dec, natural=True).natural)
    pairs = [(x,) for x in dec.tree.vertices] + list(combinations(dec.tree.vertices, 2))
    for part in components(rest):
        component = frozenset(new_to_old[v] for v in part)
        boundary = host.neighborhood(component)
        if not any(boundary <= dec.union_of(pair) for pair in pairs):
            violations.append(Violation("component neighbourhood not inside two bags", tuple(sorted(component))))
        if natural:
            outside, outside_map = delete_vertices(host, component)
            touched = {
                index
                for index, piece in enumerate(components(outside))
                for v in boundary
                if outside_map[v] in piece
            }
            if len(touched) > 2:
                violations.append(Violation("neighbourhood meets more than two components", tuple(sorted(component))))
    return violations
