"""Suites on weak reachability and the constructive ordering schemes."""

import numpy as np

from wcol_graphs.constructions.basic import grid_graph, path_graph
from wcol_graphs.graph.generators import random_connected_graph, random_graph, random_partial_ktree, random_tree
from wcol_graphs.graph.graph import Graph, ball, delete_vertices, distances_from, geodesic
from wcol_graphs.orderings.ordering import Ordering
from wcol_graphs.orderings.reachability import wcol_of_ordering, wreach_sets
from wcol_graphs.orderings.schemes import (
    ceil_log2,
    dyadic_path_ordering,
    elimination_ordering,
    pathwidth_ordering,
    prepend_sets,
)
from wcol_graphs.parameters.certificate import Parameter
from wcol_graphs.parameters.widths import treewidth_pathwidth_exact
from workbench.verification.registry import suite
from workbench.verification.report import CaseRecorder, Tally
from workbench.verification.sampling import isomorphism_classes, random_ordering, random_subset


def wreach_by_paths(g: Graph, scope: frozenset[int], sigma: Ordering, r: int) -> dict[int, frozenset[int]]:
    """WReach_r straight from the definition, by enumerating every path of length ≤ r from every vertex."""
    position = sigma.position
    reached: dict[int, set[int]] = {u: set() for u in g.vertices}

    def walk(u: int, path: list[int]) -> None:
        end = path[-1]
        if end in scope and all(position[w] >= position[end] for w in path if w in scope):
            reached[u].add(end)
        if len(path) > r:
            return
        for w in sorted(g.neighbors(end)):
            if w not in path:
                path.append(w)
                walk(u, path)
                path.pop()

    for u in g.vertices:
        walk(u, [u])
    return {u: frozenset(vs) for u, vs in reached.items()}


@suite("wreach-oracle", "breadth-first weak reachability equals enumeration of all short paths", "sweeps")
def wreach_oracle(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    max_r = config.get("wreach_max_radius", 3)
    for n in range(1, config.get("wreach_max_vertices", 5) + 1):
        tally = Tally()
        for g in recorder.progress(isomorphism_classes(n), f"wreach on {n} vertices"):
            for scope in (frozenset(g.vertices), random_subset(g.vertices, rng)):
                sigma = random_ordering(scope, rng)
                for r in range(max_r + 1):
                    ok = wreach_sets(g, scope, sigma, r) == wreach_by_paths(g, scope, sigma, r)
                    tally.add(ok, g, ordering=list(sigma.sequence), r=r)
        tally.record(recorder, f"wreach_sets agrees with path enumeration on {n} vertices, r ≤ {max_r}")


@suite("ordering-bounds", "elimination, dyadic and pathwidth orderings meet their wcol bounds", "ordering_bounds")
def ordering_bounds(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    bound, ancestors = Tally(), Tally()
    for _ in recorder.progress(range(config.get("trees", 100)), "trees"):
        t = random_tree(int(rng.integers(1, config.get("tree_max_vertices", 50) + 1)), rng)
        s, r = int(rng.integers(0, t.n)), int(rng.integers(1, config.get("tree_max_radius", 8) + 1))
        sigma = elimination_ordering(t, s)
        value = wcol_of_ordering(t, t.vertices, sigma, r).value
        bound.add(value <= r + 1, t, root=s, r=r, value=value)
        depth = distances_from(t, s)
        reach = wreach_sets(t, t.vertices, sigma, r)
        ok = all(
            _is_ancestor(t, depth, v, u) and depth[u] - depth[v] <= r for u, vs in reach.items() for v in vs
        )
        ancestors.add(ok, t, root=s, r=r)
    bound.record(recorder, "elimination orderings of random trees: wcol_r ≤ r + 1")
    ancestors.record(recorder, "elimination orderings: WReach_r[u] ⊆ ancestors of u within distance r")

    radii = config.get("path_radii", [2, 64])
    for n in config.get("path_lengths", [22, 64, 200]):
        p = path_graph(n)
        tally = Tally()
        for r in range(radii[0], radii[1] + 1):
            for s in sorted({ceil_log2(r), ceil_log2(r + 1)}):
                value = wcol_of_ordering(p, p.vertices, dyadic_path_ordering(p, r, s), r).value
                tally.add(value <= 2 + s, p, r=r, s=s, value=value)
        tally.record(recorder, f"dyadic orderings of P_{n}: wcol_r ≤ 2 + s for s = ⌈log r⌉, ⌈log(r + 1)⌉")
    p22 = path_graph(22)
    value = wcol_of_ordering(p22, p22.vertices, dyadic_path_ordering(p22, 7), 7).value
    recorder.record("dyadic ordering of P_22 with r = 7", "≤ 5", value, value <= 5, p22, r=7)

    grids = Tally()
    for cols in config.get("grid_columns", [2, 3, 4, 5, 6]):
        g = grid_graph(2, cols)
        _grid_bounds(g, config.get("grid_radii", [1, 2, 3]), grids, columns=cols)
    grids.record(recorder, "pathwidth orderings of 2 x n grids: wcol_r ≤ 1 + pw(2r + 1)")

    bounded = Tally()
    width = config.get("bounded_width", 3)
    for _ in recorder.progress(range(config.get("bounded_width_instances", 20)), "bounded width"):
        g, _ = random_partial_ktree(int(rng.integers(1, config.get("bounded_width_vertices", 12) + 1)), width, rng)
        _grid_bounds(g, config.get("grid_radii", [1, 2, 3]), bounded, width=width)
    bounded.record(recorder, f"pathwidth orderings of random treewidth-{width} graphs: wcol_r ≤ 1 + pw(2r + 1)")


def _is_ancestor(t: Graph, depth: dict[int, int], v: int, u: int) -> bool:
    """Whether v lies on the path from u up to the root."""
    current = u
    while depth[current] > depth[v]:
        current = next(w for w in t.neighbors(current) if depth[w] == depth[current] - 1)
    return current == v


def _grid_bounds(g: Graph, radii: list[int], tally: Tally, **params) -> None:
    certificate = treewidth_pathwidth_exact(g, Parameter.PW)
    sigma = pathwidth_ordering(g, certificate.witness)
    for r in radii:
        value = wcol_of_ordering(g, g.vertices, sigma, r).value
        tally.add(value <= 1 + certificate.value * (2 * r + 1), g, r=r, pw=certificate.value, value=value, **params)


@suite("geodesic-ball", "a geodesic meets every ball of radius r in at most 2r + 1 vertices", "geodesic_ball")
def geodesic_ball(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    tally = Tally()
    max_n, p = config.get("max_vertices", 40), config.get("edge_probability", 0.12)
    for _ in recorder.progress(range(config.get("samples", 1000)), "geodesic balls"):
        g = random_connected_graph(int(rng.integers(1, max_n + 1)), p, rng)
        a, b, v = (int(x) for x in rng.integers(0, g.n, size=3))
        r = int(rng.integers(0, config.get("max_radius", 5) + 1))
        path = geodesic(g, {a}, {b})
        met = len(ball(g, v, r) & set(path))
        tally.add(met <= 2 * r + 1, g, ends=[a, b], vertex=v, r=r, met=met)
    tally.record(recorder, "|N^r[v] ∩ V(Q)| ≤ 2r + 1 for random geodesics Q")


def _random_geodesic(g: Graph, rng: np.random.Generator, removed: frozenset[int] = frozenset()) -> tuple[int, ...]:
    """A geodesic of g - removed between two random vertices, in the labels of g; one vertex if they are apart."""
    rest, old_to_new = delete_vertices(g, removed)
    if rest.n == 0:
        return ()
    new_to_old = {new: old for old, new in old_to_new.items()}
    a, b = (int(x) for x in rng.integers(0, rest.n, size=2))
    path = geodesic(rest, {a}, {b}) or (a,)
    return tuple(new_to_old[v] for v in path)


@suite("composition-laws", "evaluated orderings obey the union, monotonicity and geodesic laws", "composition_laws")
def composition_laws(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    union, monotone, geodesics, geodesics_minus = Tally(), Tally(), Tally(), Tally()
    max_n, p = config.get("max_vertices", 12), config.get("edge_probability", 0.25)
    max_r, max_l = config.get("max_radius", 3), config.get("max_geodesics", 2)
    for _ in recorder.progress(range(config.get("samples", 500)), "composition laws"):
        g = random_graph(int(rng.integers(1, max_n + 1)), p, rng)
        r, ell = int(rng.integers(1, max_r + 1)), int(rng.integers(1, max_l + 1))
        scope = random_subset(g.vertices, rng)
        sigma = random_ordering(scope, rng)
        base = wcol_of_ordering(g, scope, sigma, r).value
        params = {"scope": sorted(scope), "ordering": list(sigma.sequence), "r": r}

        other = random_subset(g.vertices, rng) - scope
        rest, old_to_new = delete_vertices(g, scope)
        other_sigma = random_ordering(other, rng)
        combined = Ordering(sigma.sequence + other_sigma.sequence)
        value = wcol_of_ordering(g, scope | other, combined, r).value
        moved = other_sigma.relabelled(old_to_new)
        rest_value = wcol_of_ordering(rest, moved.scope, moved, r).value
        union.add(value <= base + rest_value, g, other=list(other_sigma.sequence), **params)

        removed = random_subset(g.vertices, rng, 0.3)
        rest, old_to_new = delete_vertices(g, removed)
        kept_sigma = sigma.relabelled(old_to_new)
        value = wcol_of_ordering(rest, kept_sigma.scope, kept_sigma, r).value
        monotone.add(value <= base, g, removed=sorted(removed), **params)

        paths = [_random_geodesic(g, rng) for _ in range(ell)]
        extended = prepend_sets(g, sigma, paths)
        value = wcol_of_ordering(g, extended.scope, extended, r).value
        geodesics.add(value <= base + ell * (2 * r + 1), g, geodesics=[list(q) for q in paths], **params)

        apexes = random_subset(g.vertices, rng, 0.2)
        paths = [_random_geodesic(g, rng, apexes) for _ in range(ell)]
        extended = prepend_sets(g, sigma, [apexes, *paths])
        value = wcol_of_ordering(g, extended.scope, extended, r).value
        rest, old_to_new = delete_vertices(g, apexes)
        kept_sigma = sigma.relabelled(old_to_new)
        rest_value = wcol_of_ordering(rest, kept_sigma.scope, kept_sigma, r).value
        limit = len(apexes) + ell * (2 * r + 1) + rest_value
        geodesics_minus.add(value <= limit, g, apexes=sorted(apexes), geodesics=[list(q) for q in paths], **params)

    union.record(recorder, "wcol(G, S ∪ S') ≤ wcol(G, S) + wcol(G - S, S' - S) for S ordered first")
    monotone.record(recorder, "wcol(G - U, S - U) ≤ wcol(G, S) under the restricted ordering")
    geodesics.record(recorder, "prepending l geodesics costs at most l(2r + 1)")
    geodesics_minus.record(
        recorder, "A, then l geodesics of G - A, then S: at most |A| + l(2r + 1) + wcol(G - A, S - A)"
    )
