"""Node budgets for exhaustive searches."""

from threading import Lock
from typing import Optional

from .errors import BudgetExceeded, RangeError


class SearchBudget:
    """Thread-safe counter of search nodes against a fixed quota.

    Enumeration and brute-force sweeps charge one unit per node visited; once
    the quota is spent, ``charge`` raises BudgetExceeded.
    """

    def __init__(self, limit: int, label: str = "search"):
        """Initialize SearchBudget.

        Args:
            limit: Maximum number of nodes (must be positive)
            label: Name used in error messages
        """
        if limit <= 0:
            raise RangeError(f"budget must be positive, got {limit}", witness={"budget": limit})
        self.limit = limit
        self.label = label
        self.used = 0
        self.lock = Lock()

    def charge(self, nodes: int = 1) -> None:
        """Consume budget.

        Args:
            nodes: Nodes visited since the previous charge (default: 1)

        Raises:
            BudgetExceeded: If the quota is exhausted
        """
        with self.lock:
            self.used += nodes
            if self.used > self.limit:
                raise BudgetExceeded(
                    f"{self.label} budget of {self.limit} nodes exhausted"
                )

    def remaining(self) -> int:
        """Get remaining nodes.

        Returns:
            Unspent node count (never negative)
        """
        with self.lock:
            return max(0, self.limit - self.used)

    def reset(self, limit: Optional[int] = None) -> None:
        """Reset usage, optionally with a new limit."""
        with self.lock:
            self.used = 0
            if limit is not None:
                self.limit = limit
