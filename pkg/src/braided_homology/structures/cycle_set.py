"""Cycle sets and their involutive braidings."""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Dict, Optional, Sequence, Tuple

from ..core.errors import CycleViolation, RowNotPermutation, SizeMismatch
from ..core.tables import Table, check_table, inverse_permutation, is_permutation
from ..utils.logging import get_logger
from .braided import BraidedSet

logger = get_logger(__name__)


@dataclass(frozen=True)
class CycleSet:
    """Finite cycle set: dot[a][b] = a·b with bijective rows.

    star[a][b] = a∗b is the inverse of the row of a, so a·(a∗b) = b.
    """

    size: int
    dot: Table
    star: Table

    def op(self, a: int, b: int) -> int:
        return self.dot[a][b]

    @cached_property
    def squaring(self) -> Tuple[int, ...]:
        return tuple(self.dot[a][a] for a in range(self.size))

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": "cycle_set",
            "size": self.size,
            "table": [list(r) for r in self.dot],
        }


def cycle_failure(dot: Table) -> Optional[Tuple[int, int, int]]:
    """First triple (a, b, c) with (a·b)·(a·c) != (b·a)·(b·c), or None."""
    n = len(dot)
    for a, b in product(range(n), repeat=2):
        if a == b:
            continue
        ra, rb = dot[a], dot[b]
        rab, rba = dot[ra[b]], dot[rb[a]]
        for c in range(n):
            if rab[ra[c]] != rba[rb[c]]:
                return a, b, c
    return None


def validate_cycle_set(dot: Sequence[Sequence[int]]) -> CycleSet:
    """Validate an operation table as a cycle set.

    Args:
        dot: n x n table with dot[a][b] = a·b

    Returns:
        CycleSet with derived star table

    Raises:
        SizeMismatch: Empty or non-square table
        RangeError: Entry out of range
        RowNotPermutation: A left translation is not bijective
        CycleViolation: The cycle property fails; witness is the triple
    """
    n = len(dot)
    if n == 0:
        raise SizeMismatch("cycle set must have at least one element")
    table = check_table(dot, n, n, n, "dot")
    for a, row in enumerate(table):
        if not is_permutation(row):
            raise RowNotPermutation(f"row {a} is not a permutation", witness={"row": a})
    bad = cycle_failure(table)
    if bad is not None:
        raise CycleViolation(f"cycle property fails at {bad}", witness=list(bad))
    star = tuple(inverse_permutation(row) for row in table)
    logger.debug("cycle set validated", size=n)
    return CycleSet(n, table, star)


def from_cycle_set(C: CycleSet) -> BraidedSet:
    """Associated braiding sigma(a, b) = ((b∗a)·b, b∗a).

    The result is involutive and LND; its sideways operations both equal the
    cycle operation.
    """
    n = C.size
    right = tuple(tuple(C.star[b][a] for b in range(n)) for a in range(n))
    left = tuple(tuple(C.dot[C.star[b][a]][b] for b in range(n)) for a in range(n))
    return BraidedSet(n, left, right)


def trivial_cycle_set(n: int) -> CycleSet:
    """x·y = y on n points."""
    return validate_cycle_set([list(range(n)) for _ in range(n)])


def permutation_cycle_set(theta: Sequence[int]) -> CycleSet:
    """x·y = theta(y) for a fixed permutation theta."""
    return validate_cycle_set([list(theta) for _ in range(len(theta))])
