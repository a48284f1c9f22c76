"""Exhaustive and isomorph-free generation of finite cycle sets.

Tables are filled cell by cell. After every assignment the cycle property
(x·y)·(x·z) = (y·x)·(y·z) is propagated: when five of the six entries of an
instance are known, the sixth is forced. Rows are kept injective, and a row
with a single open cell is completed at once.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from ..core.budget import SearchBudget
from ..core.errors import BudgetExceeded, RangeError
from ..core.tables import Table
from ..structures.cycle_set import CycleSet, validate_cycle_set
from ..utils.config import setting
from ..utils.logging import get_logger
from .canonical import canonical_table

logger = get_logger(__name__)

Row = Tuple[int, ...]


@dataclass
class EnumerationConfig:
    """What to enumerate and how much search to allow."""

    size: int
    square_free: bool = False
    up_to_iso: bool = False
    budget: Optional[int] = None
    workers: Optional[int] = None

    def __post_init__(self) -> None:
        if self.size < 1:
            raise RangeError(f"size must be >= 1, got {self.size}", witness={"size": self.size})
        self.budget = setting(self.budget, "enumeration.budget")
        self.workers = setting(self.workers, "enumeration.workers")


class _TableSearch:
    def __init__(self, n: int, budget: SearchBudget):
        self.n = n
        self.budget = budget
        self.table = [[-1] * n for _ in range(n)]
        self.used = [[False] * n for _ in range(n)]
        self.open = [n] * n
        self.trail: List[Tuple[int, int]] = []

    def assign(self, x: int, y: int, v: int) -> bool:
        current = self.table[x][y]
        if current >= 0:
            return current == v
        if self.used[x][v]:
            return False
        self.table[x][y] = v
        self.used[x][v] = True
        self.open[x] -= 1
        self.trail.append((x, y))
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            x, y = self.trail.pop()
            self.used[x][self.table[x][y]] = False
            self.table[x][y] = -1
            self.open[x] += 1

    def _complete_rows(self) -> Optional[bool]:
        changed = False
        for x in range(self.n):
            if self.open[x] == 1:
                y = self.table[x].index(-1)
                v = self.used[x].index(False)
                if not self.assign(x, y, v):
                    return None
                changed = True
        return changed

    def propagate(self) -> bool:
        """Run the cycle-property and row constraints to a fixpoint; False on contradiction."""
        T, n = self.table, self.n
        while True:
            changed = False
            for x in range(n):
                rx = T[x]
                for y in range(n):
                    if x == y:
                        continue
                    u, w = rx[y], T[y][x]
                    if u < 0 or w < 0:
                        continue
                    ry, ru, rw = T[y], T[u], T[w]
                    for z in range(n):
                        a, b = rx[z], ry[z]
                        if a < 0 or b < 0:
                            continue
                        p, q = ru[a], rw[b]
                        if p >= 0 and q >= 0:
                            if p != q:
                                return False
                        elif p >= 0:
                            if not self.assign(w, b, p):
                                return False
                            changed = True
                        elif q >= 0:
                            if not self.assign(u, a, q):
                                return False
                            changed = True
            rows = self._complete_rows()
            if rows is None:
                return False
            if not (changed or rows):
                return True

    def _next_open(self) -> Optional[Tuple[int, int]]:
        for x in range(self.n):
            if self.open[x]:
                return x, self.table[x].index(-1)
        return None

    def solutions(self) -> Iterator[Table]:
        self.budget.charge()
        if not self.propagate():
            return
        cell = self._next_open()
        if cell is None:
            yield tuple(tuple(r) for r in self.table)
            return
        x, y = cell
        for v in range(self.n):
            if self.used[x][v]:
                continue
            mark = len(self.trail)
            if self.assign(x, y, v):
                yield from self.solutions()
            self.undo(mark)


def _seeded_search(n: int, square_free: bool, row0: Row, budget: SearchBudget) -> Iterator[Table]:
    search = _TableSearch(n, budget)
    for y, v in enumerate(row0):
        if not search.assign(0, y, v):
            return
    if square_free:
        for x in range(1, n):
            if not search.assign(x, x, x):
                return
    yield from search.solutions()


def row0_candidates(n: int, square_free: bool, up_to_iso: bool) -> List[Row]:
    """First-row seeds.

    Without isomorph rejection every admissible permutation is a seed. With
    it, one seed per conjugacy class under relabelings sending some element
    to 0: a cycle type, with 0 placed on a cycle of each occurring length.
    """
    if not up_to_iso:
        return [p for p in permutations(range(n)) if not square_free or p[0] == 0]
    seeds = []
    for parts in _partitions(n):
        lengths = sorted(set(parts), reverse=True)
        if square_free:
            lengths = [1] if 1 in parts else []
        for first in lengths:
            rest = list(parts)
            rest.remove(first)
            seeds.append(_permutation_from_cycles([first] + rest))
    return seeds


def _partitions(n: int, largest: Optional[int] = None) -> Iterator[List[int]]:
    largest = n if largest is None else largest
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield [part] + rest


def _permutation_from_cycles(lengths: Sequence[int]) -> Row:
    perm = [0] * sum(lengths)
    start = 0
    for length in lengths:
        for i in range(length):
            perm[start + i] = start + (i + 1) % length
        start += length
    return tuple(perm)


def _search_subtree(n: int, square_free: bool, up_to_iso: bool, row0: Row, limit: int) -> Tuple[List[Table], int]:
    """Worker entry point: every solution seeded by row0, canonicalised when up_to_iso."""
    budget = SearchBudget(limit, f"enumeration (size {n})")
    found: List[Table] = []
    try:
        for table in _seeded_search(n, square_free, row0, budget):
            found.append(canonical_table(table) if up_to_iso else table)
    except BudgetExceeded as exc:
        exc.partial = found
        raise
    return found, budget.used


def enumerate_cycle_sets(cfg: EnumerationConfig) -> Iterator[CycleSet]:
    """Stream every cycle set of the configured size (canonical representatives when up_to_iso).

    Raises:
        BudgetExceeded: When the node budget runs out; partial carries what was emitted
    """
    n = cfg.size
    assert cfg.budget is not None and cfg.workers is not None
    seeds = row0_candidates(n, cfg.square_free, cfg.up_to_iso)
    seen: Set[Table] = set()
    emitted: List[CycleSet] = []

    def accept(table: Table) -> Optional[CycleSet]:
        if cfg.up_to_iso:
            if table in seen:
                return None
            seen.add(table)
        C = validate_cycle_set(table)
        emitted.append(C)
        return C

    if cfg.workers > 1 and len(seeds) > 1:
        nodes = 0
        failure: Optional[BudgetExceeded] = None
        results: List[List[Table]] = []
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [
                pool.submit(_search_subtree, n, cfg.square_free, cfg.up_to_iso, seed, cfg.budget) for seed in seeds
            ]
            for future in futures:
                try:
                    tables, used = future.result()
                except BudgetExceeded as exc:
                    failure = failure or exc
                    results.append(exc.partial)
                    continue
                nodes += used
                results.append(tables)
        if failure is None and nodes > cfg.budget:
            failure = BudgetExceeded(f"enumeration budget of {cfg.budget} nodes exhausted")
        for tables in results:
            for table in sorted(tables):
                C = accept(table)
                if C is not None:
                    yield C
        if failure is not None:
            logger.warning("enumeration budget exhausted", size=n, emitted=len(emitted), workers=cfg.workers)
            raise BudgetExceeded(str(failure), partial=emitted) from failure
    else:
        budget = SearchBudget(cfg.budget, f"enumeration (size {n})")
        try:
            for seed in seeds:
                for table in _seeded_search(n, cfg.square_free, seed, budget):
                    C = accept(canonical_table(table) if cfg.up_to_iso else table)
                    if C is not None:
                        yield C
        except BudgetExceeded as exc:
            logger.warning("enumeration budget exhausted", size=n, emitted=len(emitted))
            raise BudgetExceeded(str(exc), partial=emitted) from exc
        nodes = budget.used
    logger.info("enumeration finished", size=n, nodes=nodes, emitted=len(emitted))


def count_cycle_sets(n: int, square_free: bool = False, up_to_iso: bool = True, budget: Optional[int] = None) -> int:
    return sum(1 for _ in enumerate_cycle_sets(EnumerationConfig(n, square_free, up_to_iso, budget)))
