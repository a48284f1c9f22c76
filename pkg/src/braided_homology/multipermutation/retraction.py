"""Square-freeness, retraction, multipermutation level and the doubling construction."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..core.errors import Degenerate, NotSquareFree
from ..core.report import IdentityReport
from ..core.tables import is_permutation
from ..extensions.cochains import Cochain2, delta_cochain
from ..extensions.extension import extend
from ..homology.groups import FiniteAbelianGroup
from ..structures.cycle_set import CycleSet, validate_cycle_set
from ..utils.logging import get_logger

logger = get_logger(__name__)

Z2 = FiniteAbelianGroup.cyclic(2)


def is_square_free(C: CycleSet) -> bool:
    return all(C.dot[x][x] == x for x in range(C.size))


def is_nondegenerate(C: CycleSet) -> bool:
    """The squaring map x ↦ x·x is a permutation."""
    return is_permutation(C.squaring)


def _require_nondegenerate(C: CycleSet) -> None:
    if not is_nondegenerate(C):
        raise Degenerate(witness={"squaring": list(C.squaring)})


def retraction_map(C: CycleSet) -> Tuple[int, ...]:
    """Class index of each element under a ≈ a' ⟺ a·b = a'·b for all b.

    Classes are numbered in order of their least element.
    """
    labels: Dict[Tuple[int, ...], int] = {}
    result = []
    for row in C.dot:
        result.append(labels.setdefault(row, len(labels)))
    return tuple(result)


def retract(C: CycleSet) -> CycleSet:
    """Ret(C): the induced operation [a]·[b] = [a·b] on the ≈-classes.

    Raises:
        Degenerate: If the squaring map is not bijective
    """
    _require_nondegenerate(C)
    proj = retraction_map(C)
    size = max(proj) + 1
    representative = [0] * size
    for a in reversed(range(C.size)):
        representative[proj[a]] = a
    table = [[proj[C.dot[representative[i]][representative[j]]] for j in range(size)] for i in range(size)]
    quotient = validate_cycle_set(table)
    for a in range(C.size):
        for b in range(C.size):
            assert quotient.dot[proj[a]][proj[b]] == proj[C.dot[a][b]], "projection is not a morphism"
    logger.debug("retraction computed", size=C.size, retract=size)
    return quotient


@dataclass
class MpReport:
    """Sizes |Ret⁰(C)|, |Ret¹(C)|, ... and the multipermutation level, if any."""

    levels: List[int] = field(default_factory=list)
    level: Optional[int] = None

    @property
    def multipermutation(self) -> bool:
        return self.level is not None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "levels": list(self.levels),
            "level": self.level,
            "multipermutation": self.multipermutation,
        }


def mp_level(C: CycleSet) -> MpReport:
    """Retract until one point is left or the size stops shrinking.

    Raises:
        Degenerate: If C is degenerate
    """
    _require_nondegenerate(C)
    report = MpReport([C.size])
    current = C
    while current.size > 1:
        smaller = retract(current)
        if smaller.size == current.size:
            logger.debug("retraction stabilised", size=current.size)
            return report
        report.levels.append(smaller.size)
        current = smaller
    report.level = len(report.levels) - 1
    return report


def doubling_cocycle(C: CycleSet) -> Cochain2:
    """f(x, y) = 0 if x = y else 1 over Z/2."""
    return delta_cochain(C, Z2, (1,), (0,))


def doubling_extension(C: CycleSet) -> CycleSet:
    """Square-free cycle set of size 2n whose retraction is C.

    Raises:
        NotSquareFree: If C is not square-free
    """
    if not is_square_free(C):
        bad = next(x for x in range(C.size) if C.dot[x][x] != x)
        raise NotSquareFree(witness={"element": bad})
    total = extend(C, Z2, doubling_cocycle(C)).total
    assert is_square_free(total)
    logger.debug("doubling built", size=C.size, total=total.size)
    return total


def check_doubling(C: CycleSet, doubled: CycleSet) -> IdentityReport:
    """Ret(doubled) ≅ C through (α, x) ↦ x, with one ≈-class per fiber."""
    report = IdentityReport("doubling_retract")
    n = C.size
    proj = retraction_map(doubled)
    report.record(doubled.size == 2 * n, check="size", size=doubled.size)
    report.record(is_square_free(doubled), check="square_free")
    for x in range(n):
        report.record(proj[x] == proj[n + x], check="fiber in one class", element=x)
        for y in range(x + 1, n):
            report.record(proj[x] != proj[y], check="fibers separated", pair=(x, y))
    if report.passed:
        quotient = retract(doubled)
        class_of = [proj[x] for x in range(n)]
        for x in range(n):
            for y in range(n):
                ok = quotient.dot[class_of[x]][class_of[y]] == class_of[C.dot[x][y]]
                report.record(ok, check="isomorphism", pair=(x, y))
    return report


def doubling_tower(levels: int) -> List[CycleSet]:
    """The singleton followed by `levels` successive doublings."""
    tower = [validate_cycle_set([[0]])]
    for _ in range(levels):
        tower.append(doubling_extension(tower[-1]))
    return tower
