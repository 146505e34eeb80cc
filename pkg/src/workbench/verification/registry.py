"""Registry of the verification suites.

Every suite is a function ``run(recorder, config, rng)`` registered under its name with the claim it checks and
the section of suite_params.yml it reads.
"""

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from workbench.verification.report import CaseRecorder

SuiteRunner = Callable[[CaseRecorder, dict, np.random.Generator], None]


@dataclass(frozen=True)
class Suite:
    """A named suite: the claim, its config section and the function running its cases."""

    name: str
    claim: str
    config_key: str | None
    runner: SuiteRunner


SUITES: dict[str, Suite] = {}


def suite(name: str, claim: str, config_key: str | None = None) -> Callable[[SuiteRunner], SuiteRunner]:
    """Register the decorated function as the suite `name`."""

    def register(runner: SuiteRunner) -> SuiteRunner:
        SUITES[name] = Suite(name, claim, config_key, runner)
        return runner

    return register
