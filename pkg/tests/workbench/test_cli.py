"""Test suite for the wcol-workbench command line interface."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from wcol_graphs.constructions.basic import complete_graph, cycle_graph, grid_graph, path_graph
from wcol_graphs.graph.dimacs import read_graph_file, write_graph_file
from wcol_graphs.graph.graph import Graph
from wcol_graphs.utils import file_utils
from workbench.main import USAGE_ERROR, main, run


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _graph_file(directory: Path, name: str, g: Graph) -> str:
    path = directory / f"{name}.graph"
    write_graph_file(g, path)
    return str(path)


def _stdout_json(result):
    assert result.exit_code in (0, 2), f"Command failed with {result.exit_code}: {result.output}"
    return json.loads(result.stdout)


def test_gen_writes_graph_and_recipe(runner, tmp_path):  # noqa: D103
    """gen -o writes the graph file and a sidecar recipe."""
    output = tmp_path / "p4.graph"
    result = runner.invoke(main, ["gen", "path", "n=4", "-o", str(output)])
    assert result.exit_code == 0, result.output
    assert read_graph_file(output) == path_graph(4), "The written graph should be P4"
    recipe = json.loads(output.with_suffix(".json").read_text())
    assert recipe["family"] == "path" and recipe["n"] == 4 and recipe["m"] == 3, "The recipe should describe P4"


def test_gen_to_stdout_with_json_params(runner):  # noqa: D103
    """Parameters may be given as a JSON object; without -o the graph is printed."""
    result = runner.invoke(main, ["gen", "cycle", '{"n": 5}'])
    assert result.exit_code == 0, result.output
    assert "p 5 5" in result.stdout, "The header of C5 should be printed"
    assert result.stdout.startswith("c recipe"), "The recipe should be printed as a comment"


@pytest.mark.parametrize(
    "args",
    [
        ["gen", "hypercube", "n=3"],
        ["gen", "grid", "rows"],
        ["gen", "cycle", "n=2"],
        ["verify"],
        ["verify", "no-such-suite"],
        ["bench", "no-such-target"],
    ],
)
def test_usage_errors(args):  # noqa: D103
    """Unknown names, malformed parameters and missing arguments all give the usage-error exit code."""
    assert run(args) == USAGE_ERROR, f"{args} should be a usage error"


def test_wcol_exact(runner, tmp_path):  # noqa: D103
    """The default search is exhaustive and prints its certificate."""
    path = _graph_file(tmp_path, "p5", path_graph(5))
    data = _stdout_json(runner.invoke(main, ["wcol", path, "-r", "1"]))
    assert data["value"] == 2 and data["exact"], "wcol_1(P5) is two"
    assert sorted(data["ordering"]) == [0, 1, 2, 3, 4], "The ordering should cover the graph"


def test_wcol_with_scope(runner, tmp_path):  # noqa: D103
    """A scope file restricts the ordered vertices."""
    path = _graph_file(tmp_path, "p5", path_graph(5))
    scope = tmp_path / "scope.txt"
    scope.write_text("0 4\n")
    data = _stdout_json(runner.invoke(main, ["wcol", path, "-S", str(scope), "-r", "3"]))
    assert data["value"] == 2, "The middle vertices of P5 reach both ends at r = 3"
    assert sorted(data["ordering"]) == [0, 4], "Only the scope is ordered"


def test_wcol_scheme(runner, tmp_path):  # noqa: D103
    """Scheme orderings are evaluated, and a scheme that does not fit the graph is a usage error."""
    path = _graph_file(tmp_path, "p7", path_graph(7))
    data = _stdout_json(runner.invoke(main, ["wcol", path, "-r", "2", "--scheme", "elimination"]))
    assert data["value"] == 3, "From an end of P7 every vertex reaches its two predecessors"
    cycle = _graph_file(tmp_path, "c5", cycle_graph(5))
    assert run(["wcol", cycle, "-r", "2", "--scheme", "elimination"]) == USAGE_ERROR, "C5 is not a tree"
    assert run(["wcol", path, "-r", "2", "--scheme", "dyadic", "--exact"]) == USAGE_ERROR, "Exclusive options"


def test_params(runner, tmp_path):  # noqa: D103
    """Selected parameters are printed with their witnesses, in the requested order."""
    path = _graph_file(tmp_path, "p4", path_graph(4))
    data = _stdout_json(runner.invoke(main, ["params", path, "--which", "td,rtd2,vc,bracket"]))
    assert [entry["parameter"] for entry in data] == ["td", "rtd2", "vc", "bracket"], "Order should be kept"
    assert data[0]["value"] == 3 and data[1]["value"] == 2 and data[2]["value"] == 2, "td 3, rtd2 2, vc 2"
    assert (data[3]["lower"], data[3]["upper"]) == (0, 1), "Trees have the bracket (0, 1)"
    assert run(["params", path, "--which", "width"]) == USAGE_ERROR, "Unknown parameters are usage errors"


def test_minor(runner, tmp_path):  # noqa: D103
    """A found model exits 0; an exhausted budget exits 2."""
    k3, c5 = _graph_file(tmp_path, "k3", complete_graph(3)), _graph_file(tmp_path, "c5", cycle_graph(5))
    result = runner.invoke(main, ["minor", k3, c5])
    data = _stdout_json(result)
    assert result.exit_code == 0 and data["status"] == "found", "K3 is a minor of C5"
    assert len(data["model"]["branch"]) == 3, "One branch set per pattern vertex"

    k5, grid = _graph_file(tmp_path, "k5", complete_graph(5)), _graph_file(tmp_path, "grid", grid_graph(3, 3))
    result = runner.invoke(main, ["minor", k5, grid, "--budget", "1"])
    assert result.exit_code == 2, "A spent budget is inconclusive"
    assert _stdout_json(result)["status"] == "exhausted", "The status should say so"


def test_richmodel(runner, tmp_path):  # noqa: D103
    """Rich model search reads the family file and rejects disconnected members."""
    k2, p4 = _graph_file(tmp_path, "k2", complete_graph(2)), _graph_file(tmp_path, "p4", path_graph(4))
    family = tmp_path / "family.json"
    family.write_text("[[0], [3]]")
    data = _stdout_json(runner.invoke(main, ["richmodel", k2, p4, str(family)]))
    assert data["status"] == "found" and sorted(data["model"]["anchors"]) == [0, 1], "Both members anchor"

    family.write_text("[[0, 2]]")
    assert run(["richmodel", k2, p4, str(family)]) == USAGE_ERROR, "A disconnected member is a usage error"
    family.write_text("[[0], []]")
    assert run(["richmodel", k2, p4, str(family)]) == USAGE_ERROR, "An empty member fails validation"


def test_verify_list(runner):  # noqa: D103
    """--list prints every registered suite with its claim."""
    result = runner.invoke(main, ["verify", "--list"])
    assert result.exit_code == 0, result.output
    for name in ("grohe-wcol", "leaf-block-refinement", "minor-bridge"):
        assert name in result.stdout, f"{name} should be listed"


def test_verify_writes_report(runner, tmp_path):  # noqa: D103
    """A passing suite exits 0 and writes its JSON report."""
    report_path = tmp_path / "reports" / "grohe-trees.json"
    result = runner.invoke(main, ["verify", "grohe-trees", "--seed", "7", "--json", str(report_path), "-q"])
    assert result.exit_code == 0, result.output
    report = json.loads(report_path.read_text())
    assert report["seed"] == 7, "The seed should be recorded"
    assert report["summary"] == {"pass": 8, "fail": 0, "inconclusive": 0}, "Four radii, two claims each"
    assert all("runtime" not in case for case in report["cases"]), "Runtimes are left out by default"


def test_growth_command(runner, tmp_path):  # noqa: D103
    """The growth command fits a small family and writes the samples."""
    csv_path = tmp_path / "paths.csv"
    args = ["growth", "paths", "--vertices", "40", "--r-min", "2", "--r-max", "8", "--csv", str(csv_path)]
    data = _stdout_json(runner.invoke(main, args))
    assert data["samples"] == 7, "Radii 2 to 8"
    assert csv_path.read_text().startswith("r,wcol,exact"), "The CSV should have a header"


def test_growth_trees_defaults(runner):  # noqa: D103
    """The default tree run is deep enough to show linear growth up to r_max."""
    data = _stdout_json(runner.invoke(main, ["growth", "trees"]))
    assert data["samples"] == 63 and data["dropped"] == 0, "Radii 2 to 64 are all exact"
    assert not data["log_factor"], "Trees under elimination orderings carry no log factor"
    assert abs(data["alpha"] - 1) <= 0.15, f"The exponent {data['alpha']} should be close to one"


def test_expose_configs(runner, tmp_path, monkeypatch):  # noqa: D103
    """The default parameter files are copied to <project-root>/config."""
    monkeypatch.setattr(file_utils, "find_project_root", lambda: tmp_path)
    result = runner.invoke(main, ["expose-configs"])
    assert result.exit_code == 0, result.output
    for name in ("search_params.yml", "suite_params.yml", "bench_params.yml"):
        assert (tmp_path / "config" / name).exists(), f"{name} should be copied"
    file_utils.read_params.cache_clear()
