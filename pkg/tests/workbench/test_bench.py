"""Test suite for the bench command's timing reports."""

import json

import pytest

from wcol_graphs.errors import UnknownTarget
from workbench.verification.bench import BenchTarget, bench


def test_unknown_target():  # noqa: D103
    """Only the three registered searches can be benchmarked."""
    with pytest.raises(UnknownTarget):
        bench("treewidth")
    assert BenchTarget.infer_type("rtd2") == BenchTarget.RTD2, "Targets are looked up by value"


def test_bench_wcol_exact():  # noqa: D103
    """Each instance reports its size, value and node count."""
    report = bench("wcol-exact", [{"family": "path", "params": {"n": 5}, "r": 1}])
    (record,) = report.records
    assert (record.n, record.m, record.value, record.status) == (5, 4, "2", "exact"), "wcol_1(P5) is two"
    assert record.nodes > 0 and record.seconds >= 0, "Nodes and time should be counted"
    assert record.instance == "path:n=5 r=1", "The label names the family and the radius"


def test_bench_rtd2():  # noqa: D103
    """rtd2 benches count memo entries as nodes."""
    report = bench(BenchTarget.RTD2, [{"family": "gadget", "params": {"k": 3, "l": 3}}])
    assert int(report.records[0].value) >= 4, "The gadget H_{3,3} has rtd2 at least four"
    assert report.records[0].nodes > 0, "The memo should hold entries"


def test_bench_model_search(tmp_path):  # noqa: D103
    """Model searches report their status and write a JSON report."""
    instances = [
        {"pattern": {"family": "complete", "params": {"n": 3}}, "host": {"family": "cycle", "params": {"n": 5}}},
        {"pattern": {"family": "complete", "params": {"n": 4}}, "host": {"family": "cycle", "params": {"n": 6}}},
    ]
    report = bench("model-search", instances)
    assert [record.status for record in report.records] == ["found", "absent"], "K3 ≼ C5 but not K4 ≼ C6"
    path = tmp_path / "bench.json"
    report.write(path)
    data = json.loads(path.read_text())
    assert data["target"] == "model-search" and len(data["instances"]) == 2, "Both instances should be written"
    assert "wall time [s]" in report.to_table(), "The table reports the wall time"
