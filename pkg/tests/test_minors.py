"""Test suite for minor models, rich models, rerooting and the decomposition tools."""

import pytest

from wcol_graphs.constructions.basic import complete_graph, cycle_graph, dary_tree, grid_graph, path_graph
from wcol_graphs.constructions.gluing import double_tower
from wcol_graphs.errors import BadParams, InvalidDecomposition, InvalidModel
from wcol_graphs.graph.generators import random_partial_ktree
from wcol_graphs.graph.graph import ball
from wcol_graphs.graph.structures import TreeDecomposition, path_decomposition_of_ordering
from wcol_graphs.minors.decompositions import (
    Hit,
    Pack,
    check_hit_or_pack,
    helly_hit_or_pack,
    shrink_interfaces,
    verify_interfaces,
)
from wcol_graphs.minors.model import (
    Model,
    RichModel,
    SubgraphFamily,
    check_model,
    validate_model,
    validate_rich_model,
)
from wcol_graphs.minors.rerooting import reroot_fhd_model, reroot_tprime_model
from wcol_graphs.minors.search import disjoint_members, find_model, find_rich_model, is_subgraph
from wcol_graphs.minors.star_layering import Cover, check_star_cover, check_star_witness, star_layering
from wcol_graphs.utils.budget import SearchStatus


def _path_decomposition(n: int) -> TreeDecomposition:
    return path_decomposition_of_ordering(path_graph(n), range(n)).as_tree_decomposition()


def test_is_subgraph():  # noqa: D103
    """Subgraph search finds P3 in C5 and rules out C4 in P5."""
    outcome = is_subgraph(path_graph(3), cycle_graph(5))
    assert outcome.found, "P3 is a subgraph of C5"
    image = outcome.result
    assert all(cycle_graph(5).has_edge(image[u], image[v]) for u, v in path_graph(3).edges), "Edges must map to edges"
    assert is_subgraph(cycle_graph(4), path_graph(5)).absent, "C4 is not a subgraph of P5"


@pytest.mark.parametrize(
    "pattern,host,found",
    [
        (complete_graph(3), cycle_graph(5), True),
        (complete_graph(4), cycle_graph(6), False),
        (complete_graph(4), grid_graph(3, 3), True),
        (cycle_graph(4), path_graph(6), False),
    ],
)
def test_find_model(pattern, host, found):  # noqa: D103
    """Minor search agrees with the known minors of small graphs, and found models are valid."""
    outcome = find_model(pattern, host)
    assert outcome.found == found, f"{pattern} minor of {host} should be {found}"
    if found:
        assert validate_model(host, outcome.result) == [], "The returned model should be valid"
    else:
        assert outcome.status == SearchStatus.ABSENT, "Small searches should complete"


def test_find_model_budget():  # noqa: D103
    """A spent budget leaves the question open."""
    outcome = find_model(complete_graph(5), grid_graph(3, 3), budget=1)
    assert outcome.status == SearchStatus.EXHAUSTED, "One node cannot settle K5 in the grid"


@pytest.mark.parametrize(
    "branch,clause",
    [
        ([{0}, set()], "branch set is empty"),
        ([{0, 1}, {1, 2}], "branch sets are not disjoint"),
        ([{0, 2}, {1}], "branch set is not connected"),
        ([{0}, {3}], "pattern edge not realised"),
    ],
)
def test_validate_model(branch, clause):  # noqa: D103
    """Each broken clause of a K2 model in P4 is named."""
    violations = validate_model(path_graph(4), Model.of(complete_graph(2), branch))
    assert clause in [v.clause for v in violations], f"Expected the clause {clause!r}, got {violations}"
    with pytest.raises(InvalidModel):
        check_model(path_graph(4), Model.of(complete_graph(2), branch))


def test_model_json():  # noqa: D103
    """Models keep their branch sets through JSON and refuse a pattern of another size."""
    model = Model.of(complete_graph(2), [{0, 1}, {2}])
    assert Model.from_json(model.to_json(), complete_graph(2)) == model, "The model should survive JSON"
    with pytest.raises(InvalidModel):
        Model.from_json(model.to_json(), complete_graph(3))


def test_find_rich_model():  # noqa: D103
    """Every branch set of a rich model contains a family member."""
    host = path_graph(4)
    family = SubgraphFamily.of([{0}, {3}])
    outcome = find_rich_model(complete_graph(2), host, family)
    assert outcome.found, "The two ends can anchor the two branch sets"
    assert validate_rich_model(host, outcome.result, family) == [], "The rich model should be valid"
    assert sorted(outcome.result.anchors) == [0, 1], "Both members should be used"
    assert find_rich_model(complete_graph(2), host, SubgraphFamily.of([{1, 2}])).absent, (
        "A single member cannot anchor two disjoint branch sets"
    )


def test_rich_models_over_singletons_are_models():  # noqa: D103
    """With every vertex as a member, rich model search decides the minor relation."""
    host = cycle_graph(5)
    outcome = find_rich_model(complete_graph(3), host, SubgraphFamily.singletons(host))
    assert outcome.found == find_model(complete_graph(3), host).found, "Both searches should agree"


def test_disjoint_members():  # noqa: D103
    """k pairwise disjoint members are found in index order."""
    family = SubgraphFamily.of([{0, 1}, {1, 2}, {3}])
    assert disjoint_members(family, 2).result == (0, 2), "Members 0 and 2 are disjoint"
    assert disjoint_members(family, 3).absent, "Members 0 and 1 meet"


def test_reroot_fhd_model():  # noqa: D103
    """A model of F_{2,3} becomes a model of F_{2,2} whose root branch set holds the chosen vertex."""
    host = dary_tree(2, 3)
    model = Model.of(host, [{v} for v in host.vertices])
    rerooted = reroot_fhd_model(host, model, 2, 3)
    assert rerooted.pattern == dary_tree(2, 2), "The result should model F_{2,2}"
    assert 3 in rerooted.branch[0], "The root branch set should contain vertex 3"
    assert validate_model(host, rerooted) == [], "The rerooted model should be valid"


def test_reroot_fhd_keeps_anchors():  # noqa: D103
    """Rich models stay rich after rerooting."""
    host = dary_tree(2, 3)
    family = SubgraphFamily.singletons(host)
    rich = RichModel(Model.of(host, [{v} for v in host.vertices]), tuple(host.vertices))
    rerooted = reroot_fhd_model(host, rich, 2, 0)
    assert isinstance(rerooted, RichModel), "A rich model should stay rich"
    assert validate_rich_model(host, rerooted, family) == [], "Every branch set should keep its anchor"


def test_reroot_fhd_wrong_pattern():  # noqa: D103
    """Only complete (d+1)-ary trees are accepted."""
    with pytest.raises(InvalidModel):
        reroot_fhd_model(path_graph(3), Model.of(path_graph(3), [{0}, {1}, {2}]), 2, 0)


def test_reroot_tprime_model():  # noqa: D103
    """A model of the double tower over K1 becomes a model of the tower rooted at the far end of a path."""
    tprime = double_tower(complete_graph(1), 1, 1)
    host = path_graph(5)
    owner = {tprime.root: 2}
    leaves = sorted(v for v in tprime.graph.vertices if v != tprime.root)
    owner.update({leaves[0]: 1, leaves[1]: 3})
    model = Model.of(tprime.graph, [{owner[x]} for x in tprime.graph.vertices])
    rerooted = reroot_tprime_model(host, model, tprime, 4)
    tower_root = next(t for t, w in tprime.halves[0].items() if w == tprime.root)
    assert 4 in rerooted.branch[tower_root], "The root branch set should contain vertex 4"
    assert validate_model(host, rerooted) == [], "The rerooted model should be valid"
    assert rerooted.pattern.n == 2, "The tower over K1 of height one is K2"


def test_helly_hit_or_pack():  # noqa: D103
    """Disjoint members are packed; a family through one vertex is hit by one bag."""
    host, dec = path_graph(6), _path_decomposition(6)
    family = SubgraphFamily.of([{0, 1}, {2, 3}, {4, 5}])
    outcome = helly_hit_or_pack(host, dec, family, 2)
    assert isinstance(outcome, Pack), "Two disjoint members exist"
    assert check_hit_or_pack(dec, family, 2, outcome) == [], "The pack should be certified"
    outcome = helly_hit_or_pack(host, dec, family, 4)
    assert isinstance(outcome, Hit) and len(outcome.nodes) <= 3, "Four disjoint members do not exist"
    assert check_hit_or_pack(dec, family, 4, outcome) == [], "The hit should be certified"

    crossing = SubgraphFamily.of([{1, 2}, {2, 3}, {2}])
    outcome = helly_hit_or_pack(host, dec, crossing, 2)
    assert isinstance(outcome, Hit) and len(outcome.nodes) == 1, "One bag holding 2 hits every member"


def test_helly_errors():  # noqa: D103
    """d must be positive and the decomposition must be valid."""
    family = SubgraphFamily.of([{0}])
    with pytest.raises(BadParams):
        helly_hit_or_pack(path_graph(3), _path_decomposition(3), family, 0)
    with pytest.raises(InvalidDecomposition):
        helly_hit_or_pack(cycle_graph(3), _path_decomposition(3), family, 1)


def test_shrink_interfaces(rng):  # noqa: D103
    """m tree nodes grow to at most 2m - 1 nodes with the two-bag property."""
    for _ in range(20):
        g, dec = random_partial_ktree(12, 2, rng)
        size = int(rng.integers(1, min(4, dec.tree.n) + 1))
        y_nodes = [int(x) for x in rng.choice(dec.tree.n, size=size, replace=False)]
        x_nodes = shrink_interfaces(g, dec, y_nodes)
        assert set(y_nodes) <= set(x_nodes), "The chosen nodes should be kept"
        assert len(x_nodes) <= 2 * len(y_nodes) - 1, f"{len(x_nodes)} nodes grown from {len(y_nodes)}"
        assert verify_interfaces(g, dec, x_nodes) == [], "Every component should see at most two bags"
    with pytest.raises(BadParams):
        shrink_interfaces(path_graph(3), _path_decomposition(3), [])


def test_star_layering(rng):  # noqa: D103
    """The returned arm always satisfies its own clauses."""
    for _ in range(30):
        g, dec = random_partial_ktree(9, 2, rng)
        centres = rng.choice(g.n, size=3, replace=False)
        family = SubgraphFamily.of(ball(g, int(v), 1) for v in centres)
        d = int(rng.integers(1, 4))
        outcome = star_layering(g, dec, family, d, 0)
        if isinstance(outcome, Cover):
            assert check_star_cover(g, dec, family, d, 0, outcome) == [], "The cover should satisfy its clauses"
        else:
            assert check_star_witness(g, family, d, outcome) == [], "The witness should be a rich star model"


def test_star_layering_cover():  # noqa: D103
    """A single member far from u cannot anchor a star, so a layered cover comes back."""
    host, dec = path_graph(5), _path_decomposition(5)
    family = SubgraphFamily.of([{4}])
    outcome = star_layering(host, dec, family, 1, 0)
    assert isinstance(outcome, Cover), "One member cannot anchor both branch sets of F_{2,1}"
    assert outcome.layering.parts[0] == frozenset({0}), "The first layer is {u}"
    assert 4 in outcome.vertices, "The member should be hit"
    assert check_star_cover(host, dec, family, 1, 0, outcome) == [], "The cover should satisfy its clauses"
