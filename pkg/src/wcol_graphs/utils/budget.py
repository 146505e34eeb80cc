"""Node budgets and three-valued outcomes for exhaustive searches."""

from enum import Enum


class SearchStatus(Enum):
    """Outcome of a budget-bounded exhaustive search."""

    FOUND = "found"
    ABSENT = "absent"
    EXHAUSTED = "exhausted"


class BudgetExceeded(Exception):
    """Internal signal used to unwind a search once its node budget is spent.

    Never escapes the public search functions: they turn it into ``SearchStatus.EXHAUSTED``.
    """


class Budget:
    """Counts search nodes against a limit.

    Args:
        limit (int | None): Maximum number of nodes, or None for an unbounded search.
    """

    def __init__(self, limit: int | None):
        self.limit = limit
        self.nodes = 0

    def tick(self, count: int = 1) -> None:
        """Charge `count` nodes; raises BudgetExceeded once the limit is passed."""
        self.nodes += count
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded

    @property
    def exhausted(self) -> bool:
        return self.limit is not None and self.nodes > self.limit
