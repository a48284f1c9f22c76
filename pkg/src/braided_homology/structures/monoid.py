"""The idempotent braiding of a monoid."""

from itertools import product
from typing import Sequence

from ..core.errors import NotAssociative, NotUnit, SizeMismatch
from ..core.tables import check_table
from .braided import BraidedSet


def from_group(mult: Sequence[Sequence[int]], unit: int) -> BraidedSet:
    """sigma(a, b) = (unit, a⋆b) for a monoid (groups included).

    The braiding is idempotent and is LND exactly when right translations of
    the monoid are bijective, which holds for groups.

    Raises:
        NotUnit: unit is not a two-sided identity
        NotAssociative: With the failing triple
    """
    n = len(mult)
    if n == 0:
        raise SizeMismatch("monoid must have at least one element")
    t = check_table(mult, n, n, n, "mult")
    if not 0 <= unit < n:
        raise NotUnit(f"unit {unit} outside [0, {n})")
    for a in range(n):
        if t[unit][a] != a or t[a][unit] != a:
            raise NotUnit(f"{unit} is not a two-sided unit", witness={"element": a})
    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise NotAssociative(f"associativity fails at {(a, b, c)}", witness=[a, b, c])
    left = tuple(tuple(unit for _ in range(n)) for _ in range(n))
    B = BraidedSet(n, left, t)
    assert all(B.sigma(*B.sigma(a, b)) == B.sigma(a, b) for a, b in product(range(n), repeat=2)), "sigma is idempotent"
    return B


def cyclic_group(n: int) -> BraidedSet:
    """Braiding of Z/n."""
    return from_group([[(a + b) % n for b in range(n)] for a in range(n)], 0)
