"""Schemas of the JSON files read and written by the workbench.

Loading a file goes through these models so that malformed input fails with a validation message before any
graph code runs.
"""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, RootModel, field_validator

########################################################################################################################
### Graph family specs
########################################################################################################################


class FamilySpecSchema(BaseModel):
    """A family tag with its parameters, e.g. ``{"family": "grid", "params": {"rows": 3, "cols": 3}}``."""

    family: str = Field(..., description="Family tag, such as grid, grohe or double-tower.")
    params: dict[str, Any] = Field(default_factory=dict, description="Integer parameters or nested family specs.")

    model_config = ConfigDict(
        json_schema_extra={"example": {"family": "grohe", "params": {"r": 1, "t": 2}}},
    )


########################################################################################################################
### Subgraph families
########################################################################################################################


class FamilySchema(RootModel[list[list[int]]]):
    """A subgraph family as an array of vertex arrays."""

    @field_validator("root")
    @classmethod
    def check_members(cls, value: list[list[int]]) -> list[list[int]]:
        """Members must be nonempty."""
        for index, member in enumerate(value):
            if not member:
                raise ValueError(f"member {index} is empty")
        return value


########################################################################################################################
### Reports
########################################################################################################################


class CaseSchema(BaseModel):
    """One case of a suite report."""

    index: int
    description: str
    expected: str
    observed: str
    status: str = Field(..., pattern="^(pass|fail|inconclusive)$")
    runtime: float | None = None
    bundle: str | None = Field(None, description="Stem of the reproduction bundle of a failing case.")


class SuiteReportSchema(BaseModel):
    """A suite run: its cases in registry order and the seed used."""

    suite: str
    seed: int
    cases: list[CaseSchema]
    summary: dict[str, int]


class BundleSchema(BaseModel):
    """Reproduction bundle of a failing case; `graph_file` loads with every CLI subcommand."""

    suite: str
    seed: int
    case: int
    description: str
    graph_file: str
    params: dict[str, Any] = Field(default_factory=dict)
