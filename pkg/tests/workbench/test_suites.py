"""Test suite for the suite registry and small runs of every verification suite."""

import pytest

from wcol_graphs.errors import UnknownSuite
from workbench.verification.report import CaseStatus
from workbench.verification.runner import get_suite, list_suites, run_suite, suite_config

REGISTERED = [
    "grohe-wcol",
    "grohe-rtd2",
    "grohe-trees",
    "tower-rtd2",
    "gadget-tightness",
    "universality",
    "dary-tree-universality",
    "rtd2-ties",
    "rtd2-small-values",
    "apex-law",
    "minor-monotonicity",
    "degree-laws",
    "leaf-block-refinement",
    "sandwich-chain",
    "rich-model-oracles",
    "helly-star-layering",
    "interface-shrinking",
    "minor-bridge",
    "wreach-oracle",
    "ordering-bounds",
    "geodesic-ball",
    "composition-laws",
]


def test_registry():  # noqa: D103
    """Every suite is registered once, with a claim, in registration order."""
    suites = list_suites()
    assert sorted(s.name for s in suites) == sorted(REGISTERED), "The registry should hold exactly these suites"
    assert all(s.claim for s in suites), "Every suite states its claim"
    with pytest.raises(UnknownSuite):
        get_suite("no-such-suite")


def test_suite_config_overrides():  # noqa: D103
    """Overrides replace single keys of the suite's section of suite_params.yml."""
    config = suite_config(get_suite("grohe-trees"), {"extra": 1})
    assert config["r_values"] == [1, 2, 3, 4] and config["extra"] == 1, "Defaults and overrides should merge"
    assert suite_config(get_suite("grohe-wcol")) == {}, "Suites without a section get an empty config"


def test_default_seed():  # noqa: D103
    """Without a seed the default of suite_params.yml is used and recorded."""
    assert run_suite("grohe-trees", {"r_values": [1]}).seed == 20240917, "The default seed should be recorded"


@pytest.mark.parametrize(
    "name,config,cases",
    [
        ("grohe-wcol", None, 3),
        ("grohe-trees", {"r_values": [1, 2]}, 4),
        ("grohe-rtd2", {"pairs": [[1, 1], [2, 1]], "stretch_pairs": []}, 2),
        ("tower-rtd2", {"bases": ["complete:n=1", "path:n=3"], "max_h": 1, "max_d": 2}, 4),
        ("gadget-tightness", {"gadgets": [[3, 3]]}, 1),
        ("rtd2-ties", {"ties_max_vertices": 4}, 3),
        ("rtd2-small-values", {"small_values_max_vertices": 3}, 8),
        ("apex-law", {"apex_max_vertices": 3}, 2),
        ("leaf-block-refinement", {"leaf_block_max_vertices": 4}, 8),
        ("sandwich-chain", {"sandwich_max_vertices": 4}, 4),
        ("wreach-oracle", {"wreach_max_vertices": 4, "wreach_max_radius": 2}, 4),
    ],
)
def test_deterministic_suites_pass(name, config, cases):  # noqa: D103
    """Small runs of the exhaustive suites pass every case."""
    report = run_suite(name, config, seed=1)
    assert len(report.cases) == cases, f"{name} should record {cases} cases, got {len(report.cases)}"
    assert report.exit_code() == 0, f"{name} failed: {report.to_table()}"


@pytest.mark.parametrize(
    "name,config",
    [
        ("minor-monotonicity", {"pairs": 20, "max_vertices": 5}),
        ("degree-laws", {"samples": 5, "max_vertices": 5}),
        ("rich-model-oracles", {"instances": 10, "max_vertices": 6}),
        ("helly-star-layering", {"instances": 10, "max_vertices": 7}),
        ("interface-shrinking", {"instances": 10, "max_vertices": 10}),
        ("minor-bridge", {"samples": 5, "max_host_vertices": 5, "max_pattern_vertices": 3}),
        ("geodesic-ball", {"samples": 50, "max_vertices": 15}),
        ("composition-laws", {"samples": 20, "max_vertices": 8}),
        ("dary-tree-universality", {"samples": 5}),
        ("universality", {"max_vertices": 3, "r_budget": 2}),
        (
            "ordering-bounds",
            {
                "trees": 5,
                "tree_max_vertices": 15,
                "path_lengths": [22],
                "path_radii": [2, 7],
                "grid_columns": [2, 3],
                "grid_radii": [1, 2],
                "bounded_width_instances": 3,
                "bounded_width_vertices": 8,
            },
        ),
    ],
)
def test_random_suites_have_no_failures(name, config):  # noqa: D103
    """Small runs of the sampling suites record no failing case."""
    report = run_suite(name, config, seed=3)
    assert report.cases, f"{name} should record cases"
    assert report.summary()[CaseStatus.FAIL.value] == 0, f"{name} failed: {report.to_table()}"


def test_stretch_case_is_inconclusive():  # noqa: D103
    """A stretch instance above the vertex cap is reported as inconclusive, not as a failure."""
    report = run_suite("grohe-rtd2", {"pairs": [[1, 1]], "stretch_pairs": [[2, 3]]}, seed=1)
    assert [case.status for case in report.cases] == [CaseStatus.PASS, CaseStatus.INCONCLUSIVE], report.to_table()
    assert report.exit_code() == 2, "Inconclusive cases alone give exit code 2"


def test_reports_are_reproducible():  # noqa: D103
    """The same seed and config give identical reports."""
    config = {"pairs": 15, "max_vertices": 5}
    first = run_suite("minor-monotonicity", config, seed=11).to_json()
    second = run_suite("minor-monotonicity", config, seed=11).to_json()
    assert first == second, "Reports without runtimes should not depend on the run"


def _checks(report, description: str) -> int:
    (case,) = [case for case in report.cases if case.description.startswith(description)]
    assert case.status == CaseStatus.PASS, f"{description}: {case.observed}"
    return int(case.observed.split(" in ")[1].split()[0])


def test_star_layering_witnesses_are_exercised():  # noqa: D103
    """Trees with more than d member-ending branches at u always yield a validated rich star."""
    report = run_suite("helly-star-layering", {"instances": 5, "witness_instances": 10, "max_vertices": 8}, seed=5)
    assert _checks(report, "a tree vertex with more than d") == 10, "Every tree instance should be checked"
    assert _checks(report, "star-layering witnesses") >= 10, "Every tree instance should validate its witness"
