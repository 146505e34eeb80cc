"""Suite reports: case results, exit codes, JSON and table output, and reproduction bundles."""

from __future__ import annotations

import logging
import time
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

import pandas as pd
from tqdm import tqdm

from wcol_graphs.graph.dimacs import write_graph_file
from wcol_graphs.graph.graph import Graph
from workbench.common.schemas import BundleSchema, SuiteReportSchema

logger = logging.getLogger(__name__)


class CaseStatus(Enum):
    """Outcome of one case."""

    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"

    @classmethod
    def infer_type(cls, passed: bool | None) -> CaseStatus:
        """True passes, False fails, None (a budget-bounded search that gave no answer) is inconclusive."""
        if passed is None:
            return cls.INCONCLUSIVE
        return cls.PASS if passed else cls.FAIL


@dataclass
class CaseResult:
    """One checked claim, with the counterexample graph and parameters when it failed."""

    index: int
    description: str
    expected: str
    observed: str
    status: CaseStatus
    runtime: float
    graph: Graph | None = None
    params: dict[str, Any] = field(default_factory=dict)
    bundle: str | None = None

    def to_json(self, include_runtime: bool = False) -> dict:
        data = {
            "index": self.index,
            "description": self.description,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status.value,
        }
        if include_runtime:
            data["runtime"] = round(self.runtime, 6)
        if self.bundle is not None:
            data["bundle"] = self.bundle
        return data


class CaseRecorder:
    """Collects the cases of a suite run in order; each case is timed from the end of the previous one.

    Args:
        progress (bool): Show tqdm progress bars on the sweeps of the suite.
    """

    def __init__(self, progress: bool = False):
        self.cases: list[CaseResult] = []
        self.progress_enabled = progress
        self._mark = time.perf_counter()

    def record(
        self,
        description: str,
        expected: object,
        observed: object,
        passed: bool | None,
        graph: Graph | None = None,
        **params,
    ) -> CaseResult:
        """Append a case; `graph` and `params` form the reproduction bundle if the case fails."""
        now = time.perf_counter()
        status = CaseStatus.infer_type(passed)
        case = CaseResult(len(self.cases), description, str(expected), str(observed), status, now - self._mark)
        if status == CaseStatus.FAIL:
            case.graph, case.params = graph, params
            logger.warning(
                "case %d failed: %s (expected %s, observed %s)", case.index, description, expected, observed
            )
        self.cases.append(case)
        self._mark = now
        return case

    def progress(self, items: Iterable, description: str, total: int | None = None) -> Iterator:
        return iter(tqdm(items, desc=description, total=total, disable=not self.progress_enabled, leave=False))


@dataclass
class SuiteReport:
    """All cases of one suite run, in registry order."""

    suite: str
    seed: int
    cases: list[CaseResult]

    def summary(self) -> dict[str, int]:
        counts = {status.value: 0 for status in CaseStatus}
        for case in self.cases:
            counts[case.status.value] += 1
        return counts

    def exit_code(self) -> int:
        """0 when every case passed, 1 when some case failed, 2 when the only non-passing cases are inconclusive."""
        summary = self.summary()
        if summary[CaseStatus.FAIL.value]:
            return 1
        return 2 if summary[CaseStatus.INCONCLUSIVE.value] else 0

    def to_json(self, include_runtime: bool = False) -> dict:
        """The report as a dictionary; without runtimes it is identical for identical seeds and configs."""
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": [case.to_json(include_runtime) for case in self.cases],
            "summary": self.summary(),
        }

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "case": case.index,
                    "status": case.status.value,
                    "description": case.description,
                    "expected": case.expected,
                    "observed": case.observed,
                    "runtime [s]": round(case.runtime, 3),
                }
                for case in self.cases
            ],
            columns=["case", "status", "description", "expected", "observed", "runtime [s]"],
        )

    def to_table(self) -> str:
        return self.to_dataframe().to_string(index=False)

    def write(self, json_path: Path, include_runtime: bool = False) -> list[Path]:
        """Write the JSON report and, next to it, a graph file and a parameter file for every failing case.

        Returns:
            list[Path]: Every file written, the report last.
        """
        json_path.parent.mkdir(parents=True, exist_ok=True)
        written = []
        for case in self.cases:
            if case.status != CaseStatus.FAIL or case.graph is None:
                continue
            stem = f"{json_path.stem}.case{case.index}"
            graph_path = json_path.parent / f"{stem}.graph"
            write_graph_file(case.graph, graph_path, comments=[f"{self.suite} case {case.index}: {case.description}"])
            bundle = BundleSchema(
                suite=self.suite,
                seed=self.seed,
                case=case.index,
                description=case.description,
                graph_file=graph_path.name,
                params=case.params,
            )
            bundle_path = json_path.parent / f"{stem}.json"
            bundle_path.write_text(bundle.model_dump_json(indent=2))
            case.bundle = stem
            written.extend([graph_path, bundle_path])
        report = SuiteReportSchema.model_validate(self.to_json(include_runtime))
        json_path.write_text(report.model_dump_json(indent=2, exclude_none=True))
        written.append(json_path)
        return written


@dataclass
class Tally:
    """Aggregates many checks of one claim into a single case, keeping the first counterexample."""

    checked: int = 0
    violations: int = 0
    unresolved: int = 0
    graph: Graph | None = None
    params: dict[str, Any] = field(default_factory=dict)

    def add(self, ok: bool | None, graph: Graph | None = None, **params) -> None:
        self.checked += 1
        if ok is None:
            self.unresolved += 1
        elif not ok:
            self.violations += 1
            if self.graph is None:
                self.graph, self.params = graph, params

    def record(self, recorder: CaseRecorder, description: str) -> CaseResult:
        observed = f"{self.violations} violations in {self.checked} checks"
        if self.unresolved:
            observed += f", {self.unresolved} unresolved"
        passed = False if self.violations else (None if self.unresolved else True)
        return recorder.record(description, "0 violations", observed, passed, self.graph, **self.params)
