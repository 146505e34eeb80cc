"""Running registered suites by name."""

import logging

from wcol_graphs.errors import UnknownSuite
from wcol_graphs.graph.generators import make_rng
from wcol_graphs.utils.file_utils import read_params
from workbench.verification import suites  # noqa: F401  (registers the suites)
from workbench.verification.registry import SUITES, Suite
from workbench.verification.report import CaseRecorder, SuiteReport

logger = logging.getLogger(__name__)


def list_suites() -> list[Suite]:
    """The registered suites in registration order."""
    return list(SUITES.values())


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError as e:
        raise UnknownSuite(f"no suite named {name!r}; choose from {sorted(SUITES)}") from e


def suite_config(entry: Suite, overrides: dict | None = None) -> dict:
    """The suite's section of suite_params.yml, updated with `overrides`."""
    params = read_params("suite_params.yml")
    config = dict(params.get(entry.config_key, {}) or {}) if entry.config_key else {}
    config.update(overrides or {})
    return config


def run_suite(name: str, config: dict | None = None, seed: int | None = None, progress: bool = False) -> SuiteReport:
    """Run every case of the suite `name` in order.

    Args:
        name (str): A registered suite name, see `list_suites`.
        config (dict | None): Values overriding the suite's section of suite_params.yml.
        seed (int | None): Seed of the random generator; defaults to `default_seed` from suite_params.yml.
        progress (bool): Show progress bars on the sweeps.

    Returns:
        SuiteReport: The cases in the order they were recorded.

    Raises:
        UnknownSuite: If no suite is registered under `name`.
    """
    entry = get_suite(name)
    if seed is None:
        seed = int(read_params("suite_params.yml")["default_seed"])
    recorder = CaseRecorder(progress=progress)
    logger.info("Running suite %s with seed %d", name, seed)
    entry.runner(recorder, suite_config(entry, config), make_rng(seed))
    report = SuiteReport(name, seed, recorder.cases)
    logger.info("Suite %s finished: %s", name, report.summary())
    return report
