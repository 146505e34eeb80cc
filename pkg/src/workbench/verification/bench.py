"""Timing the exact searches on the instance ladders of bench_params.yml."""

from __future__ import annotations

import json
import logging
import time
from dataclasses import asdict, dataclass
from enum import Enum
from pathlib import Path

import pandas as pd

from wcol_graphs.constructions.families import build_family
from wcol_graphs.errors import UnknownTarget
from wcol_graphs.minors.search import find_model
from wcol_graphs.orderings.exact import wcol_exact
from wcol_graphs.parameters.recursive import RootedTwoDepthSolver
from wcol_graphs.utils.file_utils import read_params

logger = logging.getLogger(__name__)


class BenchTarget(Enum):
    """The benchmarked searches."""

    WCOL_EXACT = "wcol-exact"
    RTD2 = "rtd2"
    MODEL_SEARCH = "model-search"

    @classmethod
    def infer_type(cls, value: str | BenchTarget) -> BenchTarget:
        if isinstance(value, cls):
            return value
        for target in cls:
            if target.value == value:
                return target
        raise UnknownTarget(f"no bench target named {value!r}; choose from {[t.value for t in cls]}")


@dataclass
class BenchRecord:
    """One timed instance. `nodes` counts search nodes, or memo entries for rtd2."""

    instance: str
    n: int
    m: int
    value: str
    status: str
    nodes: int
    seconds: float


@dataclass
class BenchReport:
    target: str
    records: list[BenchRecord]

    def to_json(self) -> dict:
        return {"target": self.target, "instances": [asdict(record) for record in self.records]}

    def to_dataframe(self) -> pd.DataFrame:
        frame = pd.DataFrame([asdict(record) for record in self.records])
        return frame.rename(columns={"seconds": "wall time [s]"})

    def to_table(self) -> str:
        return self.to_dataframe().to_string(index=False)

    def write(self, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf8") as file:
            json.dump(self.to_json(), file, indent=2)


def _label(spec: dict) -> str:
    params = ",".join(f"{key}={value}" for key, value in spec.get("params", {}).items())
    return f"{spec['family']}:{params}" if params else spec["family"]


def _bench_wcol_exact(instance: dict) -> BenchRecord:
    g = build_family(instance).graph
    r = instance.get("r", 1)
    start = time.perf_counter()
    certificate = wcol_exact(g, r=r, budget=instance.get("budget"))
    seconds = time.perf_counter() - start
    status = "exact" if certificate.exact else "budget exhausted"
    label = f"{_label(instance)} r={r}"
    return BenchRecord(label, g.n, g.m, str(certificate.value), status, certificate.nodes, seconds)


def _bench_rtd2(instance: dict) -> BenchRecord:
    g = build_family(instance).graph
    solver = RootedTwoDepthSolver()
    start = time.perf_counter()
    value = solver.value(g)
    seconds = time.perf_counter() - start
    return BenchRecord(_label(instance), g.n, g.m, str(value), "exact", solver.memo_size, seconds)


def _bench_model_search(instance: dict) -> BenchRecord:
    pattern, host = build_family(instance["pattern"]).graph, build_family(instance["host"]).graph
    start = time.perf_counter()
    outcome = find_model(pattern, host, budget=instance.get("budget"))
    seconds = time.perf_counter() - start
    label = f"{_label(instance['pattern'])} in {_label(instance['host'])}"
    return BenchRecord(label, host.n, host.m, outcome.status.value, outcome.status.value, outcome.nodes, seconds)


def bench(target: BenchTarget | str, instances: list[dict] | None = None) -> BenchReport:
    """Run the target's search on every instance of its ladder and time it.

    Args:
        target (BenchTarget | str): wcol-exact, rtd2 or model-search.
        instances (list[dict] | None): The ladder; defaults to the target's entry in bench_params.yml.

    Returns:
        BenchReport: One record per instance, in ladder order.

    Raises:
        UnknownTarget: If the target is not registered.
    """
    target = BenchTarget.infer_type(target)
    if instances is None:
        instances = read_params("bench_params.yml").get(target.value, [])
    runner = {
        BenchTarget.WCOL_EXACT: _bench_wcol_exact,
        BenchTarget.RTD2: _bench_rtd2,
        BenchTarget.MODEL_SEARCH: _bench_model_search,
    }[target]
    records = []
    for instance in instances:
        record = runner(instance)
        logger.info(
            "%s %s: %s in %.3f s (%d nodes)", target.value, record.instance, record.value, record.seconds, record.nodes
        )
        records.append(record)
    return BenchReport(target.value, records)
