"""Suites on the laws of td, td2 and rtd2, swept over small graphs or sampled at random."""

import numpy as np

from wcol_graphs.errors import InvalidCertificate
from wcol_graphs.graph.generators import random_graph
from wcol_graphs.graph.graph import Graph, apex, contract_edge, delete_edge, delete_vertices
from wcol_graphs.parameters.certificate import Parameter, replay_certificate
from wcol_graphs.parameters.recursive import (
    RootedTwoDepthSolver,
    TreedepthSolver,
    TwoDepthSolver,
    rooted_twodepth_by_separations,
    rtd2_at_most_one,
    rtd2_at_most_two,
)
from wcol_graphs.parameters.vertex_cover import vertex_cover_number
from wcol_graphs.parameters.widths import treewidth_pathwidth_exact
from workbench.verification.registry import suite
from workbench.verification.report import CaseRecorder, Tally
from workbench.verification.sampling import isomorphism_classes


@suite("rtd2-ties", "td2(G) ≤ rtd2(G) ≤ 2 td2(G) - 2 for every graph with an edge", "sweeps")
def rtd2_ties(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    td2_solver, rtd2_solver = TwoDepthSolver(), RootedTwoDepthSolver()
    for n in range(2, config.get("ties_max_vertices", 6) + 1):
        tally = Tally()
        for g in recorder.progress(isomorphism_classes(n, min_edges=1), f"ties on {n} vertices"):
            td2, rtd2 = td2_solver.value(g), rtd2_solver.value(g)
            tally.add(td2 <= rtd2 <= 2 * td2 - 2, g, td2=td2, rtd2=rtd2)
        tally.record(recorder, f"td2 ≤ rtd2 ≤ 2 td2 - 2 on {n} vertices")


@suite("rtd2-small-values", "rtd2 ≤ 1 iff edgeless, rtd2 ≤ 2 iff forest", "sweeps")
def rtd2_small_values(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    solver = RootedTwoDepthSolver()
    for n in range(0, config.get("small_values_max_vertices", 6) + 1):
        at_most_one, at_most_two = Tally(), Tally()
        for g in recorder.progress(isomorphism_classes(n), f"small values on {n} vertices"):
            value = solver.value(g)
            at_most_one.add(rtd2_at_most_one(g) == (value <= 1), g, rtd2=value)
            at_most_two.add(rtd2_at_most_two(g) == (value <= 2), g, rtd2=value)
        at_most_one.record(recorder, f"rtd2 ≤ 1 iff no edges, {n} vertices")
        at_most_two.record(recorder, f"rtd2 ≤ 2 iff forest, {n} vertices")


@suite("apex-law", "rtd2(K_1 ⊕ G) = 1 + rtd2(G), and likewise for td2", "sweeps")
def apex_law(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    td2_solver, rtd2_solver = TwoDepthSolver(), RootedTwoDepthSolver()
    rtd2_tally, td2_tally = Tally(), Tally()
    for n in range(0, config.get("apex_max_vertices", 5) + 1):
        for g in recorder.progress(isomorphism_classes(n), f"apex law on {n} vertices"):
            cone, _ = apex(g)
            rtd2, cone_rtd2 = rtd2_solver.value(g), rtd2_solver.value(cone)
            td2, cone_td2 = td2_solver.value(g), td2_solver.value(cone)
            rtd2_tally.add(cone_rtd2 == rtd2 + 1, g, rtd2=rtd2, apex_rtd2=cone_rtd2)
            td2_tally.add(cone_td2 == td2 + 1, g, td2=td2, apex_td2=cone_td2)
    rtd2_tally.record(recorder, "rtd2(K_1 ⊕ G) = 1 + rtd2(G)")
    td2_tally.record(recorder, "td2(K_1 ⊕ G) = 1 + td2(G)")


def one_minor_operation(g: Graph, rng: np.random.Generator) -> tuple[Graph, dict]:
    """Delete a vertex, delete an edge or contract an edge, chosen at random (a vertex when there is no edge)."""
    operations = ["delete-vertex", "delete-edge", "contract-edge"]
    operation = "delete-vertex" if g.m == 0 else operations[int(rng.integers(0, 3))]
    if operation == "delete-vertex":
        v = int(rng.integers(0, g.n))
        minor, _ = delete_vertices(g, [v])
        return minor, {"operation": operation, "vertex": v}
    u, v = sorted(g.edges)[int(rng.integers(0, g.m))]
    if operation == "delete-edge":
        return delete_edge(g, u, v), {"operation": operation, "edge": [u, v]}
    minor, _ = contract_edge(g, u, v)
    return minor, {"operation": operation, "edge": [u, v]}


@suite("minor-monotonicity", "rtd2(H) ≤ rtd2(G) whenever H is a minor of G", "minor_monotonicity")
def minor_monotonicity(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    solver = RootedTwoDepthSolver()
    tallies = {name: Tally() for name in ("delete-vertex", "delete-edge", "contract-edge")}
    max_n, p = config.get("max_vertices", 7), config.get("edge_probability", 0.45)
    for _ in recorder.progress(range(config.get("pairs", 500)), "minor pairs"):
        g = random_graph(int(rng.integers(1, max_n + 1)), p, rng)
        minor, params = one_minor_operation(g, rng)
        value, minor_value = solver.value(g), solver.value(minor)
        tallies[params["operation"]].add(minor_value <= value, g, rtd2=value, minor_rtd2=minor_value, **params)
    for name, tally in tallies.items():
        tally.record(recorder, f"rtd2 does not increase under {name.replace('-', ' ')}")


@suite(
    "degree-laws",
    "rtd2(G) ≤ 1 + rtd2(G - u), and rtd2(G) ≤ max{2, rtd2(G - u)} when deg(u) ≤ 1",
    "degree_laws",
)
def degree_laws(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    solver = RootedTwoDepthSolver()
    deletion, pendant = Tally(), Tally()
    max_n, p = config.get("max_vertices", 7), config.get("edge_probability", 0.35)
    for _ in recorder.progress(range(config.get("samples", 60)), "degree laws"):
        g = random_graph(int(rng.integers(1, max_n + 1)), p, rng)
        value = solver.value(g)
        for u in g.vertices:
            rest, _ = delete_vertices(g, [u])
            rest_value = solver.value(rest)
            deletion.add(value <= 1 + rest_value, g, vertex=u, rtd2=value)
            if g.degree(u) <= 1:
                pendant.add(value <= max(2, rest_value), g, vertex=u, rtd2=value)
    deletion.record(recorder, "rtd2(G) ≤ 1 + rtd2(G - u) for every vertex u")
    pendant.record(recorder, "rtd2(G) ≤ max{2, rtd2(G - u)} for every vertex u of degree ≤ 1")


@suite("leaf-block-refinement", "leaf-block separations give the same rtd2 as all order-≤1 separations", "sweeps")
def leaf_block_refinement(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    solver = RootedTwoDepthSolver()
    for n in range(1, config.get("leaf_block_max_vertices", 6) + 1):
        agreement, replay = Tally(), Tally()
        for g in recorder.progress(isomorphism_classes(n), f"separations on {n} vertices"):
            certificate = solver.solve(g)
            oracle = rooted_twodepth_by_separations(g)
            agreement.add(certificate.value == oracle, g, rtd2=certificate.value, oracle=oracle)
            try:
                replayed = replay_certificate(g, certificate)
            except InvalidCertificate as error:
                replay.add(False, g, error=str(error))
                continue
            replay.add(replayed == certificate.value, g, rtd2=certificate.value, replayed=replayed)
        agreement.record(recorder, f"leaf-block recursion agrees with the separation oracle, {n} vertices")
        replay.record(recorder, f"rtd2 witness trees replay to their value, {n} vertices")


@suite("sandwich-chain", "tw(G) ≤ pw(G) ≤ td(G) - 1 ≤ vc(G)", "sweeps")
def sandwich_chain(recorder: CaseRecorder, config: dict, rng: np.random.Generator) -> None:
    td_solver = TreedepthSolver()
    for n in range(1, config.get("sandwich_max_vertices", 6) + 1):
        tally = Tally()
        for g in recorder.progress(isomorphism_classes(n), f"sandwich on {n} vertices"):
            tw = treewidth_pathwidth_exact(g, Parameter.TW).value
            pw = treewidth_pathwidth_exact(g, Parameter.PW).value
            td = td_solver.value(g)
            vc = vertex_cover_number(g).value
            tally.add(tw <= pw <= td - 1 <= vc, g, tw=tw, pw=pw, td=td, vc=vc)
        tally.record(recorder, f"tw ≤ pw ≤ td - 1 ≤ vc on {n} vertices")
