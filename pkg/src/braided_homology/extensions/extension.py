"""Abelian extensions A x_f X, their sections and equivalence classes."""

from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

from ..core.errors import NotACocycle, NotASection, NotCompatible, TooLarge
from ..core.matrix import IntMatrix
from ..core.report import IdentityReport
from ..homology.groups import FiniteAbelianGroup
from ..homology.smith import solve_mod
from ..structures.braided import BraidedSet, validate_braided_set
from ..structures.cycle_set import CycleSet, validate_cycle_set
from ..utils.config import setting
from ..utils.logging import get_logger
from .cochains import (
    Cochain2,
    all_cochains,
    coboundary,
    cocycle_failure,
    compatibility_failure,
    lnd_cocycle_failure,
)

logger = get_logger(__name__)

Table = List[List[int]]


@dataclass
class ExtensionDescriptor:
    """A x_f X on |A|·n points; element (α, x) has index rank(α)·n + x."""

    base: CycleSet
    group: FiniteAbelianGroup
    cocycle: Cochain2
    total: CycleSet

    def encode(self, alpha: Sequence[int], x: int) -> int:
        return self.group.rank(alpha) * self.base.size + x

    def decode(self, index: int) -> Tuple[Tuple[int, ...], int]:
        r, x = divmod(index, self.base.size)
        return self.group.unrank(r), x

    @property
    def projection(self) -> Tuple[int, ...]:
        return tuple(i % self.base.size for i in range(self.total.size))

    def act(self, alpha: Sequence[int], index: int) -> int:
        """α·(β, y) = (α + β, y)."""
        beta, y = self.decode(index)
        return self.encode(self.group.add(alpha, beta), y)

    def canonical_section(self) -> Tuple[int, ...]:
        return tuple(self.encode(self.group.zero, x) for x in range(self.base.size))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "extension",
            "base": self.base.size,
            "moduli": list(self.group.moduli),
            "cocycle": self.cocycle.to_dict()["values"],
            "total": self.total.to_dict(),
        }


def extend_unchecked(C: CycleSet, group: FiniteAbelianGroup, f: Cochain2) -> Table:
    """Operation table of A x X with (α,x)·(β,y) = (β + f(x,y), x·y), unvalidated."""
    n = C.size
    elements = list(group.elements())
    table = [[0] * (n * len(elements)) for _ in range(n * len(elements))]
    for (ra, _alpha), x in product(enumerate(elements), range(n)):
        row = table[ra * n + x]
        for rb, beta in enumerate(elements):
            for y in range(n):
                row[rb * n + y] = group.rank(group.add(beta, f(x, y))) * n + C.dot[x][y]
    return table


def extend(C: CycleSet, group: FiniteAbelianGroup, f: Cochain2) -> ExtensionDescriptor:
    """The extension A x_f X.

    Raises:
        SizeMismatch: If f lives on another base
        NotACocycle: With the failing triple
    """
    bad = cocycle_failure(C, f)
    if bad is not None:
        raise NotACocycle(f"cocycle condition fails at {bad}", witness=list(bad))
    total = validate_cycle_set(extend_unchecked(C, group, f))
    logger.debug("extension built", base=C.size, group=str(group), total=total.size)
    return ExtensionDescriptor(C, group, f, total)


def check_descriptor(E: ExtensionDescriptor) -> IdentityReport:
    """Projection is a morphism, A acts regularly on fibers, (αy)·z = y·z and y·(αz) = α(y·z)."""
    report = IdentityReport("extension_descriptor")
    n, dot, base = E.base.size, E.total.dot, E.base.dot
    proj = E.projection
    elements = list(E.group.elements())
    for p, q in product(range(E.total.size), repeat=2):
        report.record(proj[dot[p][q]] == base[proj[p]][proj[q]], check="morphism", pair=(p, q))
    for x in range(n):
        fiber = {E.encode(a, x) for a in elements}
        orbit = {E.act(a, E.encode(E.group.zero, x)) for a in elements}
        report.record(fiber == orbit and len(orbit) == len(elements), check="regular", fiber=x)
    for alpha, p, q in product(elements, range(E.total.size), range(E.total.size)):
        report.record(dot[E.act(alpha, p)][q] == dot[p][q], check="(αy)·z = y·z", triple=(alpha, p, q))
        report.record(
            dot[p][E.act(alpha, q)] == E.act(alpha, dot[p][q]), check="y·(αz) = α(y·z)", triple=(alpha, p, q)
        )
    return report


def section_cocycle(E: ExtensionDescriptor, section: Sequence[int]) -> Cochain2:
    """The f with f(x₁,x₂)·s(x₁·x₂) = s(x₁)·s(x₂).

    Raises:
        NotASection: If projection∘s is not the identity
    """
    n = E.base.size
    if len(section) != n or any(not 0 <= s < E.total.size or s % n != x for x, s in enumerate(section)):
        raise NotASection("map is not a section of the projection", witness=list(section))
    g = E.group

    def value(x1: int, x2: int) -> Tuple[int, ...]:
        product_alpha, _ = E.decode(E.total.dot[section[x1]][section[x2]])
        shift, _ = E.decode(section[E.base.dot[x1][x2]])
        return g.sub(product_alpha, shift)

    return Cochain2.from_function(n, g, value)


def _difference_matrix(C: CycleSet) -> IntMatrix:
    """Rows (x, y), columns γ-coordinates: γ(x·y) - γ(y)."""
    n = C.size
    rows = []
    for x, y in product(range(n), repeat=2):
        row = [0] * n
        row[C.dot[x][y]] += 1
        row[y] -= 1
        rows.append(row)
    return IntMatrix(rows, n * n, n)


def extensions_equivalent(
    C: CycleSet,
    group: FiniteAbelianGroup,
    f: Cochain2,
    g: Cochain2,
    search_limit: Optional[int] = None,
) -> bool:
    """Whether some γ: X -> A has g(x,y) - f(x,y) = γ(x·y) - γ(y) for all x, y.

    Small γ-spaces are searched exhaustively; larger ones are solved
    modulo each cyclic factor through the Smith form.
    """
    limit = setting(search_limit, "extensions.gamma_search_limit")
    n = C.size
    diff = g - f
    if group.order**n <= limit:
        for ranks in product(range(group.order), repeat=n):
            gamma = [group.unrank(r) for r in ranks]
            # γ(x·y) - γ(y) = -∂¹γ(x, y)
            if (f - coboundary(C, group, gamma)).values == g.values:
                return True
        return False
    system = _difference_matrix(C)
    for idx, k in enumerate(group.moduli):
        rhs = [diff(x, y)[idx] for x, y in product(range(n), repeat=2)]
        if solve_mod(system, rhs, k) is None:
            return False
    return True


def coboundary_space(C: CycleSet, group: FiniteAbelianGroup) -> Set[Tuple[Tuple[int, ...], ...]]:
    """B² as a set of rank tables."""
    found = set()
    for ranks in product(range(group.order), repeat=C.size):
        gamma = [group.unrank(r) for r in ranks]
        found.add(coboundary(C, group, gamma).ranks())
    return found


def count_extension_classes(
    C: CycleSet,
    group: FiniteAbelianGroup,
    budget: Optional[int] = None,
) -> int:
    """Number of equivalence classes of extensions of C by A, by enumeration.

    Raises:
        TooLarge: If |A|^{n²} exceeds the cochain budget
    """
    limit = setting(budget, "extensions.cochain_budget")
    space = group.order ** (C.size * C.size)
    if space > limit:
        raise TooLarge(
            f"{space} cochains exceed the budget of {limit}",
            witness={"cochains": space, "budget": limit},
        )
    boundaries = [Cochain2.from_ranks(C.size, group, b) for b in coboundary_space(C, group)]
    seen: Set[Tuple[Tuple[int, ...], ...]] = set()
    classes = 0
    for f in all_cochains(C.size, group):
        key = f.ranks()
        if key in seen or cocycle_failure(C, f) is not None:
            continue
        classes += 1
        for b in boundaries:
            seen.add((f + b).ranks())
    logger.info("extension classes counted", size=C.size, group=str(group), classes=classes)
    return classes


def _total_braided_tables(
    B: BraidedSet, group: FiniteAbelianGroup, f: Cochain2, f_star: Cochain2
) -> Tuple[Table, Table]:
    """σ(P, Q) for P = (π, p), Q = (β, y): the A with Q⊸A = P, then σ(P, Q) = (A·Q, A).

    Q⊸(α, x) = (α + f*(y, x), y⊸x), so x = p^y and α = π - f*(y, x).
    """
    n = B.size
    elements = list(group.elements())
    size = n * len(elements)
    left = [[0] * size for _ in range(size)]
    right = [[0] * size for _ in range(size)]
    for (rp, pi), p in product(enumerate(elements), range(n)):
        P = rp * n + p
        for (rq, beta), y in product(enumerate(elements), range(n)):
            Q = rq * n + y
            x = B.right[p][y]
            alpha = group.sub(pi, f_star(y, x))
            left[P][Q] = group.rank(group.add(beta, f(x, y))) * n + B.dot(x, y)
            right[P][Q] = group.rank(alpha) * n + x
    return left, right


def extend_braided(B: BraidedSet, group: FiniteAbelianGroup, f: Cochain2, f_star: Cochain2) -> BraidedSet:
    """LND braiding on A x X with (α,x)·(β,y) = (β+f(x,y), x·y) and (α,x)⊸(β,y) = (β+f*(x,y), x⊸y).

    Raises:
        NotLeftNondegenerate: If B is not LND
        NotCompatible: Naming the failing condition and triple
    """
    B.require_lnd()
    checks = (
        ("lnd_cocycle", lnd_cocycle_failure(B, f)),
        ("star_cocycle", lnd_cocycle_failure(B, f_star, star=True)),
        ("compatibility", compatibility_failure(B, f, f_star)),
    )
    for name, bad in checks:
        if bad is not None:
            raise NotCompatible(f"{name} condition fails at {bad}", witness={"condition": name, "triple": list(bad)})
    left, right = _total_braided_tables(B, group, f, f_star)
    return validate_braided_set(left, right)
