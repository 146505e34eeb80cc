"""Layered hitting sets in graphs without a rich model of a star.

Given a connected host with a tree decomposition, a family 𝓕 of connected subgraphs, d ≥ 1 and a vertex u,
star_layering returns either an 𝓕-rich model of the star F_{2,d}, or a set S hitting every member together with
a layering (P_0, ..., P_l) of host[S] where P_0 = {u}, each later layer lies in at most d bags, and every component
of host - S has its neighbourhood inside one layer or two consecutive ones.

The recursion works with the family 𝓕₀ of connected subgraphs of host - u that contain a member and a neighbour
of u. That family is not enumerated: a set Z meets all of 𝓕₀ exactly when no component of (host - u) - Z
contains both a whole member and a neighbour of u, since such a component would itself belong to 𝓕₀. The hitting
set is found by feeding violating components to the hit-or-pack greedy until it hits them all or packs d + 1 of
them, which gives the star directly.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx

from wcol_graphs.constructions.basic import dary_tree
from wcol_graphs.errors import BadParams, NotConnected
from wcol_graphs.graph.graph import Graph, components, delete_vertices, geodesic, is_connected
from wcol_graphs.graph.structures import Layering, TreeDecomposition
from wcol_graphs.graph.validation import Violation, validate_structure
from wcol_graphs.minors.decompositions import check_decomposition, greedy_hit_or_pack, node_depths
from wcol_graphs.minors.model import Model, RichModel, SubgraphFamily, validate_family, validate_rich_model

logger = logging.getLogger(__name__)

Member = tuple[int, frozenset[int]]


@dataclass(frozen=True)
class Cover:
    """The hitting set S, its layering with P_0 = {u}, and for every layer the bag nodes containing it."""

    vertices: frozenset[int]
    layering: Layering
    layer_bags: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "arm": "cover",
            "vertices": sorted(self.vertices),
            "layers": self.layering.to_json(),
            "layer_bags": [list(nodes) for nodes in self.layer_bags],
        }


@dataclass(frozen=True)
class Witness:
    """An 𝓕-rich model of F_{2,d}: branch set 0 is the centre of the star."""

    rich: RichModel

    def to_json(self) -> dict:
        data = self.rich.to_json()
        data["arm"] = "witness"
        return data


@dataclass
class _Layers:
    parts: list[frozenset[int]]
    bags: list[tuple[int, ...]]


@dataclass
class _Star:
    branch: list[frozenset[int]]
    anchors: list[int]


def _violating_component(g: Graph, u: int, members: Sequence[Member], z: frozenset[int]) -> frozenset[int] | None:
    """A component of (g - u) - Z holding a whole member and a neighbour of u, or None when Z meets all of 𝓕₀."""
    rest = nx.subgraph_view(g.nx, filter_node=lambda v: v != u and v not in z)
    for piece in sorted((frozenset(c) for c in nx.connected_components(rest)), key=min):
        if piece & g.neighbors(u) and any(member <= piece for _, member in members):
            return piece
    return None


class StarLayering:
    """The recursion of star_layering on one host, with the tree and its depths fixed throughout.

    Args:
        dec (TreeDecomposition): Decomposition of the top-level host; deeper levels reuse its tree.
        d (int): The star has d leaves.
    """

    def __init__(self, dec: TreeDecomposition, d: int):
        self.d = d
        self.depth = node_depths(dec)

    def run(self, g: Graph, bags: Sequence[frozenset[int]], members: list[Member], u: int) -> _Layers | _Star:
        outside = [(i, member) for i, member in members if u not in member]
        if not outside:
            return _Layers([frozenset([u])], [()])

        reduced = [bag - {u} for bag in bags]
        found: list[frozenset[int]] = []
        z: frozenset[int] = frozenset()
        nodes: list[int] = []
        while (piece := _violating_component(g, u, outside, z)) is not None:
            found.append(piece)
            picked, nodes = greedy_hit_or_pack(reduced, self.depth, found, self.d + 1)
            if len(picked) == self.d + 1:
                return self._star(u, [found[i] for i in picked], outside)
            z = frozenset().union(*(reduced[x] for x in nodes))
        for v in sorted(z):
            if _violating_component(g, u, outside, z - {v}) is None:
                z = z - {v}

        rest, old_to_new = delete_vertices(g, z | {u})
        new_to_old = {new: old for old, new in old_to_new.items()}
        pieces = [frozenset(new_to_old[v] for v in piece) for piece in components(rest)]
        w = frozenset().union(*(piece for piece in pieces if not piece & g.neighbors(u)))
        q = self._paths(g, u, z)
        logger.debug("layer of %d vertices from %d bags, %d vertices left below", len(z), len(nodes), len(w))

        inner, into, members_inner, bags_inner = self._contract(g, bags, members, w, q)
        result = self.run(inner, bags_inner, members_inner, 0)
        back = {new: old for old, new in into.items()}
        if isinstance(result, _Star):
            lifted = [frozenset(back[v] for v in bag if v != 0) for bag in result.branch]
            return _Star([bag | q if 0 in old else bag for bag, old in zip(lifted, result.branch)], result.anchors)
        parts = [frozenset([u]), z] + [frozenset(back[v] for v in part) for part in result.parts[1:]]
        return _Layers(parts, [(), tuple(nodes)] + result.bags[1:])

    def _star(self, u: int, pieces: list[frozenset[int]], members: Sequence[Member]) -> _Star:
        """Centre {u} ∪ A_{d+1} and leaves A_1, ..., A_d; each piece contains a member and a neighbour of u."""
        branch = [frozenset([u]) | pieces[-1]] + pieces[:-1]
        anchors = [next(i for i, member in members if member <= piece) for piece in [pieces[-1]] + pieces[:-1]]
        logger.debug("found %d disjoint pieces around vertex %d", len(pieces), u)
        return _Star(branch, anchors)

    @staticmethod
    def _paths(g: Graph, u: int, z: frozenset[int]) -> frozenset[int]:
        """Union of the geodesics Q_z from u to every z in Z, each inside g - (Z - z)."""
        covered = {u}
        for target in sorted(z):
            rest, old_to_new = delete_vertices(g, z - {target})
            new_to_old = {new: old for old, new in old_to_new.items()}
            path = geodesic(rest, {old_to_new[u]}, {old_to_new[target]})
            covered.update(new_to_old[v] for v in path)
        return frozenset(covered)

    @staticmethod
    def _contract(
        g: Graph, bags: Sequence[frozenset[int]], members: list[Member], w: frozenset[int], q: frozenset[int]
    ) -> tuple[Graph, dict[int, int], list[Member], list[frozenset[int]]]:
        """g[W ∪ Q] with Q contracted to a new vertex 0, its decomposition, and the members inside W."""
        into = {v: i + 1 for i, v in enumerate(sorted(w))}
        edges = [(into[a], into[b]) for a, b in g.edges if a in w and b in w]
        edges.extend((0, into[v]) for v in sorted(w) if g.neighbors(v) & q)
        inner = Graph.from_edges(len(w) + 1, edges)
        bags_inner = [
            frozenset(into[v] for v in bag) if bag <= w else frozenset(into[v] for v in bag & w) | {0} for bag in bags
        ]
        members_inner = [(i, frozenset(into[v] for v in member)) for i, member in members if member <= w]
        return inner, into, members_inner, bags_inner


def star_layering(host: Graph, dec: TreeDecomposition, family: SubgraphFamily, d: int, u: int) -> Cover | Witness:
    """Layered hitting set rooted at u, or an 𝓕-rich model of the star F_{2,d}.

    Args:
        host (Graph): A connected host.
        dec (TreeDecomposition): A tree decomposition of the host.
        family (SubgraphFamily): Connected subgraphs of the host.
        d (int): At least 1.
        u (int): The vertex forming layer P_0.

    Returns:
        Cover | Witness: The layered hitting set, or the rich star model.

    Raises:
        InvalidDecomposition: If dec is not a tree decomposition of the host.
        NotConnected: If the host is not connected.
        BadParams: If d < 1 or a family member is not a connected vertex set of the host.
    """
    if d < 1:
        raise BadParams(f"star_layering needs d ≥ 1, got {d}")
    if not is_connected(host):
        raise NotConnected("star_layering needs a connected host")
    host.check_vertex(u)
    check_decomposition(host, dec)
    problems = validate_family(host, family)
    if problems:
        raise BadParams(f"invalid family: {problems[0]}")

    result = StarLayering(dec, d).run(host, dec.bags, list(enumerate(family.members)), u)
    if isinstance(result, _Star):
        return Witness(RichModel(Model(dary_tree(2, d), tuple(result.branch)), tuple(result.anchors)))
    layering = Layering.of(result.parts)
    return Cover(layering.scope, layering, tuple(result.bags))


def check_star_cover(
    host: Graph, dec: TreeDecomposition, family: SubgraphFamily, d: int, u: int, cover: Cover
) -> list[Violation]:
    """Check the layering with P_0 = {u}, then that S hits every member (a), every component of host - S sees
    one layer or two consecutive ones (b), and every later layer lies in its at most d recorded bags (c)."""
    parts = cover.layering.parts
    violations = list(validate_structure(host, cover.layering, scope=cover.vertices).violations)
    if not parts or parts[0] != frozenset([u]):
        violations.append(Violation("first layer is not {u}", (u,)))
    for i, member in enumerate(family.members):
        if not member & cover.vertices:
            violations.append(Violation("member not hit", (i,)))
    layer = cover.layering.layer_of()
    rest, old_to_new = delete_vertices(host, cover.vertices)
    new_to_old = {new: old for old, new in old_to_new.items()}
    for piece in components(rest):
        component = frozenset(new_to_old[v] for v in piece)
        seen = {layer[v] for v in host.neighborhood(component)}
        if seen and max(seen) - min(seen) > 1:
            violations.append(Violation("neighbourhood spans non-consecutive layers", tuple(sorted(component))))
    if len(cover.layer_bags) != len(parts):
        return violations + [Violation("one bag list per layer required", (len(cover.layer_bags), len(parts)))]
    for i in range(1, len(parts)):
        nodes = cover.layer_bags[i]
        if len(nodes) > d or not parts[i] <= dec.union_of(nodes):
            violations.append(Violation("layer not inside d bags", (i, nodes)))
    return violations


def check_star_witness(host: Graph, family: SubgraphFamily, d: int, witness: Witness) -> list[Violation]:
    """The witness must be a valid 𝓕-rich model of F_{2,d}."""
    violations = validate_rich_model(host, witness.rich, family)
    if witness.rich.model.pattern != dary_tree(2, d):
        violations.append(Violation("witness pattern is not F_{2,d}", (witness.rich.model.pattern.n,)))
    return violations
