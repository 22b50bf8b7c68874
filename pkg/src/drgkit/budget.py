"""Search budgets shared by the exact solvers and the extendability search."""

from __future__ import annotations

import time
from dataclasses import dataclass


class BudgetExceeded(RuntimeError):
    """Raised when a search runs out of budget; ``best`` holds the incumbent, if any."""

    def __init__(self, message: str, best=None) -> None:
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class SolverBudget:
    time_limit: float = 60.0
    node_limit: int = 10_000_000
    seed: int = 0

    def __post_init__(self) -> None:
        if self.time_limit <= 0 or self.node_limit <= 0:
            raise ValueError("budget limits must be positive")


class Meter:
    """Counts search nodes and checks the clock every 1024 of them."""

    def __init__(self, budget: SolverBudget, what: str) -> None:
        self.budget = budget
        self.what = what
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_limit

    def tick(self, best=None) -> None:
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise BudgetExceeded(f"{self.what}: node limit {self.budget.node_limit} reached", best)
        if self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"{self.what}: time limit {self.budget.time_limit}s reached", best)
