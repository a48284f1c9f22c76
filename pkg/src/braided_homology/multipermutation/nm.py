"""The N_m table: least size of a square-free cycle set of multipermutation level m."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..core.errors import BudgetExceeded
from ..utils.config import setting
from ..utils.logging import get_logger
from .enumerate import EnumerationConfig, enumerate_cycle_sets
from .retraction import mp_level

logger = get_logger(__name__)


@dataclass
class NmTable:
    """values[m] = N_m for every level found within the searched sizes."""

    max_m: int
    searched_size: int = 0
    values: Dict[int, int] = field(default_factory=dict)
    counts: Dict[int, int] = field(default_factory=dict)
    extended: bool = False

    @property
    def complete(self) -> bool:
        return all(m in self.values for m in range(self.max_m + 1))

    def doubling_bound_failures(self) -> List[int]:
        """Levels m with N_{m+1} > 2 N_m."""
        return [
            m
            for m in range(self.max_m)
            if m in self.values and m + 1 in self.values and self.values[m + 1] > 2 * self.values[m]
        ]

    def monotone(self) -> bool:
        known = [self.values[m] for m in sorted(self.values)]
        return all(a <= b for a, b in zip(known, known[1:]))

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "max_m": self.max_m,
            "searched_size": self.searched_size,
            "values": {str(m): n for m, n in sorted(self.values.items())},
            "square_free_counts": {str(n): c for n, c in sorted(self.counts.items())},
            "complete": self.complete,
            "extended": self.extended,
            "doubling_bound_failures": self.doubling_bound_failures(),
        }


def nm_table(
    max_m: int,
    max_size: Optional[int] = None,
    extended: bool = False,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> NmTable:
    """Scan square-free cycle sets up to isomorphism by increasing size.

    Stops once every level 0..max_m has a minimal size, or after max_size
    (default 2^max_m, which the doubling tower always reaches).

    Raises:
        BudgetExceeded: With the largest completed size and the table so far
    """
    limit = setting(budget, "enumeration.extended_budget" if extended else "enumeration.budget")
    max_size = 2**max_m if max_size is None else max_size
    table = NmTable(max_m, extended=extended)
    for n in range(1, max_size + 1):
        cfg = EnumerationConfig(n, square_free=True, up_to_iso=True, budget=limit, workers=workers)
        count = 0
        try:
            for C in enumerate_cycle_sets(cfg):
                count += 1
                level = mp_level(C).level
                if level is not None and level <= max_m and level not in table.values:
                    table.values[level] = n
                    logger.info("new level reached", level=level, size=n)
        except BudgetExceeded as exc:
            raise BudgetExceeded(
                f"N_m search stopped at size {n}: {exc.message}",
                partial=[table.to_dict()],
                completed_size=table.searched_size,
            ) from exc
        table.counts[n] = count
        table.searched_size = n
        logger.info("size searched", size=n, square_free=count)
        if table.complete:
            break
    failures = table.doubling_bound_failures()
    if failures:
        logger.warning("doubling bound violated", levels=failures)
    return table
