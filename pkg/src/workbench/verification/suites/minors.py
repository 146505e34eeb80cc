"""Suites on model searches and the tree-decomposition machinery."""

import numpy as np

from wcol_graphs.graph.generators import random_graph, random_partial_ktree
from wcol_graphs.graph.graph import Graph
from wcol_graphs.minors.decompositions import (
    check_hit_or_pack,
    helly_hit_or_pack,
    shrink_interfaces,
    verify_interfaces,
)
from wcol_graphs.minors.model import SubgraphFamily, validate_model, validate_rich_model
from wcol_graphs.minors.search import SearchOutcome, disjoint_members, find_model, find_rich_model
from wcol_graphs.minors.star_layering import Cover, check_star_cover, check_star_witness, star_layering
from wcol_graphs.parameters.recursive import RootedTwoDepthSolver
from wcol_graphs.utils.budget import SearchStatus
from workbench.verification.registry import suite
from workbench.verification.report import CaseRecorder, Tally
from workbench.verification.sampling import random_family


def _agree(first: SearchOutcome, second: SearchOutcome) -> bool | None:
    if SearchStatus.EXHAUSTED in (first.status, second.status):
        return None
    return first.found == second.found


@suite(
    "rich-model-oracles",
    "rich model searches agree with the disjoint-members and plain model searches",
    "rich_models",
)
def rich_model_oracles(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    edgeless, singletons, valid = Tally(), Tally(), Tally()
    max_n, p = config.get("max_vertices", 10), config.get("edge_probability", 0.3)
    max_k = config.get("max_pattern_vertices", 3)
    for _ in recorder.progress(range(config.get("instances", 200)), "rich models"):
        host = random_graph(int(rng.integers(1, max_n + 1)), p, rng)
        k = int(rng.integers(1, max_k + 1))
        family = random_family(host, int(rng.integers(1, 6)), rng)
        params = {"k": k, "family": family.to_json()}

        rich = find_rich_model(Graph(k), host, family)
        packing = disjoint_members(family, k)
        edgeless.add(_agree(rich, packing), host, **params)
        if rich.found:
            valid.add(not validate_rich_model(host, rich.result, family), host, **params)

        pattern = random_graph(k, 0.5, rng)
        params = {"pattern_n": k, "pattern_edges": [list(e) for e in sorted(pattern.edges)]}
        rich = find_rich_model(pattern, host, SubgraphFamily.singletons(host))
        plain = find_model(pattern, host)
        singletons.add(_agree(rich, plain), host, **params)
        if plain.found:
            valid.add(not validate_model(host, plain.result), host, **params)
    edgeless.record(recorder, "rich models of k isolated vertices exist iff k disjoint members exist")
    singletons.record(recorder, "rich models for the singleton family exist iff models exist")
    valid.record(recorder, "every returned model passes its validator")


@suite("helly-star-layering", "hit-or-pack and star-layering outputs satisfy their clauses", "helly_star_layering")
def helly_star_layering(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    helly, covers, witnesses, branched = Tally(), Tally(), Tally(), Tally()
    max_n, width, max_d = config.get("max_vertices", 10), config.get("width", 2), config.get("max_d", 3)
    for _ in recorder.progress(range(config.get("instances", 200)), "helly and star layering"):
        host, dec = random_partial_ktree(int(rng.integers(1, max_n + 1)), width, rng)
        family = random_family(host, int(rng.integers(0, config.get("family_size", 4) + 1)), rng)
        d, u = int(rng.integers(1, max_d + 1)), int(rng.integers(0, host.n))
        params = {"decomposition": dec.to_json(), "family": family.to_json(), "d": d, "u": u}

        outcome = helly_hit_or_pack(host, dec, family, d)
        problems = check_hit_or_pack(dec, family, d, outcome)
        helly.add(not problems, host, problems=[str(v) for v in problems], **params)

        result = star_layering(host, dec, family, d, u)
        if isinstance(result, Cover):
            problems = check_star_cover(host, dec, family, d, u, result)
            covers.add(not problems, host, problems=[str(v) for v in problems], **params)
        else:
            problems = check_star_witness(host, family, d, result)
            witnesses.add(not problems, host, problems=[str(v) for v in problems], **params)
    for _ in recorder.progress(range(config.get("witness_instances", 50)), "stars in trees"):
        tree, dec = random_partial_ktree(int(rng.integers(3, max(3, max_n) + 1)), 1, rng, keep_probability=1.0)
        u = max(tree.vertices, key=lambda v: (tree.degree(v), -v))
        d = int(rng.integers(1, min(max_d, tree.degree(u) - 1) + 1))
        leaves = SubgraphFamily.of({v} for v in tree.vertices if v != u and tree.degree(v) == 1)
        params = {"decomposition": dec.to_json(), "family": leaves.to_json(), "d": d, "u": u}
        # more than d branches at u, each ending in a member: no d bags hit them all
        result = star_layering(tree, dec, leaves, d, u)
        branched.add(not isinstance(result, Cover), tree, **params)
        if not isinstance(result, Cover):
            problems = check_star_witness(tree, leaves, d, result)
            witnesses.add(not problems, tree, problems=[str(v) for v in problems], **params)
    helly.record(recorder, "the returned hit-or-pack arm carries a valid certificate")
    covers.record(recorder, "star-layering covers hit every member, see ≤ 2 consecutive layers, fit in d bags")
    witnesses.record(recorder, "star-layering witnesses are rich models of the star with d leaves")
    branched.record(recorder, "a tree vertex with more than d member-ending branches anchors a rich star")


@suite("interface-shrinking", "m tree nodes grow to ≤ 2m - 1 nodes with the two-bag property", "interface_shrinking")
def interface_shrinking(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    sizes, interfaces = Tally(), Tally()
    max_n, width, max_m = config.get("max_vertices", 14), config.get("width", 3), config.get("max_y_nodes", 4)
    for _ in recorder.progress(range(config.get("instances", 100)), "interfaces"):
        host, dec = random_partial_ktree(int(rng.integers(1, max_n + 1)), width, rng)
        m = int(rng.integers(1, min(max_m, dec.tree.n) + 1))
        y_nodes = sorted(int(x) for x in rng.choice(dec.tree.n, size=m, replace=False))
        x_nodes = shrink_interfaces(host, dec, y_nodes)
        params = {"decomposition": dec.to_json(), "y_nodes": y_nodes, "x_nodes": list(x_nodes)}
        sizes.add(set(y_nodes) <= set(x_nodes) and len(x_nodes) <= 2 * m - 1, host, **params)
        problems = verify_interfaces(host, dec, x_nodes)
        interfaces.add(not problems, host, problems=[str(v) for v in problems], **params)
    sizes.record(recorder, "x_nodes contains y_nodes and has at most 2m - 1 nodes")
    interfaces.record(recorder, "every residual component sees at most two bags (and two sides when natural)")


@suite("minor-bridge", "a model of H in G implies rtd2(H) ≤ rtd2(G)", "minor_bridge")
def minor_bridge(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    solver = RootedTwoDepthSolver()
    tally = Tally()
    max_host, max_pattern = config.get("max_host_vertices", 7), config.get("max_pattern_vertices", 4)
    for _ in recorder.progress(range(config.get("samples", 60)), "minor bridge"):
        host = random_graph(int(rng.integers(1, max_host + 1)), 0.45, rng)
        pattern = random_graph(int(rng.integers(1, max_pattern + 1)), 0.5, rng)
        outcome = find_model(pattern, host)
        if outcome.status == SearchStatus.EXHAUSTED:
            tally.add(None)
        elif outcome.found:
            host_value, pattern_value = solver.value(host), solver.value(pattern)
            params = {"pattern_n": pattern.n, "pattern_edges": [list(e) for e in sorted(pattern.edges)]}
            tally.add(pattern_value <= host_value, host, rtd2=host_value, pattern_rtd2=pattern_value, **params)
    tally.record(recorder, "rtd2(H) ≤ rtd2(G) for every H found as a minor of G")
