"""Test suite for the exact graph parameters and their certificates."""

import pytest

from wcol_graphs.constructions.basic import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    grid_graph,
    path_graph,
    star_graph,
)
from wcol_graphs.errors import BadParams, InvalidCertificate, NoEdge, SizeLimit
from wcol_graphs.graph.generators import all_graphs_up_to, random_graph
from wcol_graphs.graph.graph import Graph, apex
from wcol_graphs.parameters.certificate import (
    ParamCertificate,
    Parameter,
    StepKind,
    WitnessStep,
    replay_certificate,
)
from wcol_graphs.parameters.embedding import EmbeddingStatus, rtd2_by_embedding
from wcol_graphs.parameters.recursive import (
    RootedTwoDepthSolver,
    TreedepthSolver,
    TwoDepthSolver,
    exponent_bracket,
    rooted_twodepth,
    rooted_twodepth_by_separations,
    rtd2_at_most_one,
    rtd2_at_most_two,
    treedepth,
    twodepth,
)
from wcol_graphs.parameters.vertex_cover import vertex_cover_number
from wcol_graphs.parameters.widths import treewidth_pathwidth_exact


@pytest.mark.parametrize(
    "g,expected",
    [
        (Graph.from_edges(0, []), 0),
        (complete_graph(1), 1),
        (complete_graph(5), 5),
        (path_graph(3), 2),
        (path_graph(4), 3),
        (path_graph(7), 3),
        (star_graph(5), 2),
        (cycle_graph(4), 3),
    ],
)
def test_treedepth(g, expected):  # noqa: D103
    """Treedepth of small graphs, with a witness that replays to the value."""
    certificate = treedepth(g)
    assert certificate.value == expected, f"td of {g} should be {expected}"
    assert replay_certificate(g, certificate) == expected, "The witness tree should replay to the value"


@pytest.mark.parametrize(
    "g,expected",
    [
        (complete_graph(2), 2),
        (star_graph(4), 2),
        (path_graph(6), 2),
        (complete_graph(4), 4),
        (cycle_graph(6), 3),
        (Graph.from_edges(4, []), 1),
    ],
)
def test_twodepth(g, expected):  # noqa: D103
    """2-treedepth splits along blocks instead of components."""
    certificate = twodepth(g)
    assert certificate.value == expected, f"td2 of {g} should be {expected}"
    assert replay_certificate(g, certificate) == expected, "The witness tree should replay to the value"


@pytest.mark.parametrize(
    "g,expected",
    [
        (Graph.from_edges(0, []), 0),
        (Graph.from_edges(3, []), 1),
        (path_graph(3), 2),
        (star_graph(4), 2),
        (Graph.from_edges(5, [(0, 1), (2, 3)]), 2),
        (complete_graph(3), 3),
        (complete_graph(5), 5),
        (cycle_graph(5), 3),
        (apex(path_graph(3))[0], 3),
    ],
)
def test_rooted_twodepth(g, expected):  # noqa: D103
    """Rooted 2-treedepth of small graphs, with a separation-tree witness."""
    certificate = rooted_twodepth(g)
    assert certificate.value == expected, f"rtd2 of {g} should be {expected}"
    assert replay_certificate(g, certificate) == expected, "The witness tree should replay to the value"


def test_rooted_twodepth_matches_separation_oracle():  # noqa: D103
    """The leaf-block recursion agrees with the definition over all separations of order at most one."""
    solver = RootedTwoDepthSolver()
    for g in all_graphs_up_to(4):
        assert solver.value(g) == rooted_twodepth_by_separations(g), f"The two recursions disagree on {g}"


def test_small_value_characterisations(rng):  # noqa: D103
    """rtd2 ≤ 1 exactly for edgeless graphs and rtd2 ≤ 2 exactly for forests."""
    solver = RootedTwoDepthSolver()
    for _ in range(40):
        g = random_graph(int(rng.integers(1, 7)), 0.35, rng)
        value = solver.value(g)
        assert (value <= 1) == rtd2_at_most_one(g), f"rtd2 ≤ 1 characterisation fails on {g}"
        assert (value <= 2) == rtd2_at_most_two(g), f"rtd2 ≤ 2 characterisation fails on {g}"


def test_ties_between_td2_and_rtd2(rng):  # noqa: D103
    """td2 ≤ rtd2 ≤ 2 td2 - 2 on graphs with an edge."""
    td2_solver, rtd2_solver = TwoDepthSolver(), RootedTwoDepthSolver()
    for _ in range(40):
        g = random_graph(int(rng.integers(2, 7)), 0.5, rng)
        if g.is_edgeless():
            continue
        td2, rtd2 = td2_solver.value(g), rtd2_solver.value(g)
        assert td2 <= rtd2 <= 2 * td2 - 2, f"td2 = {td2}, rtd2 = {rtd2} on {g}"


def test_solver_memo_is_shared():  # noqa: D103
    """A solver can be reused across graphs and reports the size of its memo."""
    solver = TreedepthSolver()
    assert solver.value(path_graph(6)) == 3, "td(P6) is three"
    assert solver.memo_size > 0, "The memo should hold entries after a computation"
    assert solver.value(path_graph(5)) == 3, "td(P5) is three"
    assert solver.value(path_graph(8)) == 4, "td(P8) is four"


def test_exponent_bracket():  # noqa: D103
    """The bracket is (rtd2 - 2, rtd2 - 1)."""
    assert exponent_bracket(complete_graph(4)) == (2, 3), "K4 has rtd2 four"
    assert exponent_bracket(path_graph(4)) == (0, 1), "Trees have rtd2 two"


def test_witness_step_json():  # noqa: D103
    """Witness trees keep their shape through JSON."""
    witness = treedepth(path_graph(3)).witness
    assert WitnessStep.from_json(witness.to_json()) == witness, "The witness should survive JSON"
    assert witness.depth() >= 3, "A witness of td 2 has a delete, a split and empty leaves below it"


def test_invalid_certificates():  # noqa: D103
    """Tampered witnesses are rejected."""
    bogus = ParamCertificate(Parameter.TD, 0, WitnessStep(StepKind.EMPTY, frozenset({0})))
    with pytest.raises(InvalidCertificate):
        replay_certificate(complete_graph(1), bogus)
    split = WitnessStep(
        StepKind.SPLIT,
        frozenset({0, 1}),
        children=(WitnessStep(StepKind.EMPTY, frozenset({0})), WitnessStep(StepKind.EMPTY, frozenset({1}))),
    )
    with pytest.raises(InvalidCertificate):
        replay_certificate(complete_graph(2), ParamCertificate(Parameter.TD, 1, split))
    with pytest.raises(InvalidCertificate):
        replay_certificate(path_graph(3), ParamCertificate(Parameter.VC, 1, frozenset({0})))


@pytest.mark.parametrize(
    "g,expected",
    [(complete_graph(4), 3), (cycle_graph(5), 3), (star_graph(6), 1), (path_graph(5), 2), (Graph(3), 0)],
)
def test_vertex_cover_number(g, expected):  # noqa: D103
    """Minimum vertex covers of small graphs."""
    certificate = vertex_cover_number(g)
    assert certificate.value == expected, f"vc of {g} should be {expected}"
    assert replay_certificate(g, certificate) == expected, "The cover should cover every edge"


def test_vertex_cover_budget():  # noqa: D103
    """A spent budget is reported as a size limit."""
    with pytest.raises(SizeLimit):
        vertex_cover_number(complete_graph(6), budget=0)


@pytest.mark.parametrize(
    "g,tw,pw",
    [
        (star_graph(4), 1, 1),
        (cycle_graph(6), 2, 2),
        (complete_graph(5), 4, 4),
        (complete_bipartite_graph(2, 3), 2, 2),
        (grid_graph(3, 3), 3, 3),
        (Graph.from_edges(0, []), 0, 0),
    ],
)
def test_treewidth_pathwidth(g, tw, pw):  # noqa: D103
    """Exact widths with decompositions of exactly that width."""
    for which, expected in (("tw", tw), ("pw", pw)):
        certificate = treewidth_pathwidth_exact(g, which)
        assert certificate.value == expected, f"{which} of {g} should be {expected}"
        assert replay_certificate(g, certificate) == expected, "The decomposition should have the claimed width"


def test_widths_errors():  # noqa: D103
    """Only tw and pw are computed, and only up to the vertex cap."""
    with pytest.raises(BadParams):
        treewidth_pathwidth_exact(path_graph(3), "td")
    with pytest.raises(SizeLimit):
        treewidth_pathwidth_exact(path_graph(15), "tw")
    with pytest.raises(BadParams):
        Parameter.infer_type("width")


def test_sandwich_chain(rng):  # noqa: D103
    """tw ≤ pw ≤ td - 1 ≤ vc on random small graphs."""
    for _ in range(20):
        g = random_graph(int(rng.integers(1, 8)), 0.4, rng)
        tw = treewidth_pathwidth_exact(g, "tw").value
        pw = treewidth_pathwidth_exact(g, "pw").value
        td = treedepth(g).value
        vc = vertex_cover_number(g).value
        assert tw <= pw <= td - 1 <= vc, f"tw {tw}, pw {pw}, td {td}, vc {vc} on {g}"


def test_rtd2_by_embedding():  # noqa: D103
    """P3 is G_{1,1} itself, so the embedding confirms rtd2 = 2."""
    result = rtd2_by_embedding(path_graph(3), r_budget=1)
    assert result.t == 2 and result.rtd2 == 2, "P3 should embed at level one"
    assert result.status == EmbeddingStatus.CONFIRMED, "The embedding level should match rtd2"
    with pytest.raises(NoEdge):
        rtd2_by_embedding(Graph.from_edges(2, []))
