"""2-cochains X x X -> A and the cocycle conditions."""

from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Dict, Iterator, Optional, Sequence, Tuple

from ..core.errors import RangeError, SizeMismatch
from ..homology.groups import FiniteAbelianGroup
from ..structures.braided import BraidedSet
from ..structures.cycle_set import CycleSet

Element = Tuple[int, ...]
Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class Cochain2:
    """values[x][y] = f(x, y) as a residue tuple of the group."""

    base_size: int
    group: FiniteAbelianGroup
    values: Tuple[Tuple[Element, ...], ...]

    def __call__(self, x: int, y: int) -> Element:
        return self.values[x][y]

    @classmethod
    def from_function(
        cls, n: int, group: FiniteAbelianGroup, fn: Callable[[int, int], Sequence[int]]
    ) -> "Cochain2":
        return cls(n, group, tuple(tuple(group.reduce(fn(x, y)) for y in range(n)) for x in range(n)))

    @classmethod
    def from_ranks(cls, n: int, group: FiniteAbelianGroup, ranks: Sequence[Sequence[int]]) -> "Cochain2":
        """Build from a table of element ranks (the JSON encoding).

        Raises:
            SizeMismatch: If the table is not n x n
            RangeError: If a rank is out of range
        """
        if len(ranks) != n or any(len(row) != n for row in ranks):
            raise SizeMismatch(f"cochain table must be {n} x {n}")
        return cls(n, group, tuple(tuple(group.unrank(r) for r in row) for row in ranks))

    @classmethod
    def zero(cls, n: int, group: FiniteAbelianGroup) -> "Cochain2":
        return cls.from_function(n, group, lambda x, y: group.zero)

    def ranks(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(self.group.rank(v) for v in row) for row in self.values)

    def __add__(self, other: "Cochain2") -> "Cochain2":
        g = self.group
        return Cochain2.from_function(self.base_size, g, lambda x, y: g.add(self(x, y), other(x, y)))

    def __sub__(self, other: "Cochain2") -> "Cochain2":
        g = self.group
        return Cochain2.from_function(self.base_size, g, lambda x, y: g.sub(self(x, y), other(x, y)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": "cochain2",
            "base": self.base_size,
            "moduli": list(self.group.moduli),
            "values": [list(r) for r in self.ranks()],
        }


def validate_cochain(n: int, group: FiniteAbelianGroup, values: Sequence[Sequence[Sequence[int]]]) -> Cochain2:
    """Check shape and residue ranges of a cochain given as element tuples.

    Raises:
        SizeMismatch: Wrong table shape or tuple length
        RangeError: A residue outside [0, k)
    """
    if len(values) != n or any(len(row) != n for row in values):
        raise SizeMismatch(f"cochain table must be {n} x {n}")
    for x, row in enumerate(values):
        for y, v in enumerate(row):
            if len(v) != len(group.moduli):
                raise SizeMismatch(f"f({x},{y}) has {len(v)} components", witness=[x, y])
            if any(not 0 <= c < k for c, k in zip(v, group.moduli)):
                raise RangeError(f"f({x},{y}) = {tuple(v)} outside {group}", witness=[x, y])
    return Cochain2(n, group, tuple(tuple(tuple(v) for v in row) for row in values))


def all_cochains(n: int, group: FiniteAbelianGroup) -> Iterator[Cochain2]:
    """Every map X x X -> A, in rank order."""
    for ranks in product(range(group.order), repeat=n * n):
        yield Cochain2(
            n, group, tuple(tuple(group.unrank(ranks[x * n + y]) for y in range(n)) for x in range(n))
        )


def delta_cochain(C: CycleSet, group: FiniteAbelianGroup, alpha0: Sequence[int], alpha1: Sequence[int]) -> Cochain2:
    """f(x, y) = α₁ if x = y else α₀; always a 2-cocycle."""
    a0, a1 = group.reduce(alpha0), group.reduce(alpha1)
    return Cochain2.from_function(C.size, group, lambda x, y: a1 if x == y else a0)


def coboundary(C: CycleSet, group: FiniteAbelianGroup, gamma: Sequence[Sequence[int]]) -> Cochain2:
    """∂¹γ(x, y) = γ(y) - γ(x·y)."""
    return Cochain2.from_function(C.size, group, lambda x, y: group.sub(gamma[y], gamma[C.dot[x][y]]))


def _require_size(n: int, f: Cochain2) -> None:
    if f.base_size != n:
        raise SizeMismatch(f"cochain on {f.base_size} points, structure has {n}")


def cocycle_failure(C: CycleSet, f: Cochain2) -> Optional[Triple]:
    """First (x, y, z) with f(x,z)+f(x·y,x·z) != f(y,z)+f(y·x,y·z), or None."""
    _require_size(C.size, f)
    dot, add = C.dot, f.group.add
    for x, y, z in product(range(C.size), repeat=3):
        if add(f(x, z), f(dot[x][y], dot[x][z])) != add(f(y, z), f(dot[y][x], dot[y][z])):
            return x, y, z
    return None


def is_2cocycle(C: CycleSet, f: Cochain2) -> bool:
    """Raises SizeMismatch when sizes differ."""
    return cocycle_failure(C, f) is None


def lnd_cocycle_failure(B: BraidedSet, f: Cochain2, star: bool = False) -> Optional[Triple]:
    """First triple breaking the plain (or star) LND cocycle condition.

    plain: f(x,z) + f(x·y, x·z) = f(y,z) + f(y⊸x, y·z)
    star:  f(x,z) + f(x⊸y, x⊸z) = f(y,z) + f(y·x, y⊸z)
    """
    B.require_lnd()
    _require_size(B.size, f)
    add = f.group.add
    dot, hook = B.dot, B.hook
    for x, y, z in product(range(B.size), repeat=3):
        if star:
            lhs = add(f(x, z), f(hook(x, y), hook(x, z)))
            rhs = add(f(y, z), f(dot(y, x), hook(y, z)))
        else:
            lhs = add(f(x, z), f(dot(x, y), dot(x, z)))
            rhs = add(f(y, z), f(hook(y, x), dot(y, z)))
        if lhs != rhs:
            return x, y, z
    return None


def is_lnd_2cocycle(B: BraidedSet, f: Cochain2) -> bool:
    return lnd_cocycle_failure(B, f) is None


def is_star_2cocycle(B: BraidedSet, f: Cochain2) -> bool:
    return lnd_cocycle_failure(B, f, star=True) is None


def compatibility_failure(B: BraidedSet, f: Cochain2, f_star: Cochain2) -> Optional[Triple]:
    """First triple with f(x,z) + f*(x·y, x·z) != f*(y,z) + f(y⊸x, y⊸z)."""
    B.require_lnd()
    _require_size(B.size, f)
    _require_size(B.size, f_star)
    add = f.group.add
    dot, hook = B.dot, B.hook
    for x, y, z in product(range(B.size), repeat=3):
        if add(f(x, z), f_star(dot(x, y), dot(x, z))) != add(f_star(y, z), f(hook(y, x), hook(y, z))):
            return x, y, z
    return None


def compatible_pair(B: BraidedSet, f: Cochain2, f_star: Cochain2) -> bool:
    return compatibility_failure(B, f, f_star) is None
