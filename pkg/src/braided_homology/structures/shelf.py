"""Shelves, racks and their braidings."""

from dataclasses import dataclass
from itertools import product
from typing import Dict, Sequence

from ..core.errors import InputError, PreconditionFailed, SelfDistributivityViolation, SizeMismatch
from ..core.tables import Table, check_table, invert_columns, is_permutation
from .braided import BraidedSet

PRIMAL = "primal"
MIRROR = "mirror"


@dataclass(frozen=True)
class Shelf:
    """Self-distributive operation op[a][b] = a◁b."""

    size: int
    op: Table
    is_rack: bool
    is_spindle: bool

    @property
    def is_trivial(self) -> bool:
        return all(self.op[a][b] == a for a in range(self.size) for b in range(self.size))

    def inverse_op(self) -> Table:
        """inv[a][b] = a ◁̃ b, i.e. the c with c◁b = a (racks only)."""
        cols = invert_columns(self.op)
        if cols is None:
            raise PreconditionFailed("inverse translations exist only for racks", missing="rack")
        n = self.size
        return tuple(tuple(cols[b][a] for b in range(n)) for a in range(n))

    def to_dict(self) -> Dict[str, object]:
        return {"kind": "shelf", "size": self.size, "table": [list(r) for r in self.op]}


def validate_shelf(op: Sequence[Sequence[int]]) -> Shelf:
    """Validate (a◁b)◁c = (a◁c)◁(b◁c) on all triples.

    Raises:
        SizeMismatch: Empty or non-square table
        RangeError: Entry out of range
        SelfDistributivityViolation: With the failing triple
    """
    n = len(op)
    if n == 0:
        raise SizeMismatch("shelf must have at least one element")
    t = check_table(op, n, n, n, "op")
    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[t[a][c]][t[b][c]]:
            raise SelfDistributivityViolation(
                f"self-distributivity fails at {(a, b, c)}", witness=[a, b, c]
            )
    is_rack = all(is_permutation([t[a][b] for a in range(n)]) for b in range(n))
    is_spindle = all(t[a][a] == a for a in range(n))
    return Shelf(n, t, is_rack, is_spindle)


def from_shelf(S: Shelf, variant: str = PRIMAL) -> BraidedSet:
    """Shelf braiding.

    primal: sigma(a, b) = (b, a◁b); mirror: sigma(a, b) = (b◁a, a).
    """
    n = S.size
    if variant == PRIMAL:
        left = tuple(tuple(b for b in range(n)) for _ in range(n))
        right = S.op
    elif variant == MIRROR:
        left = tuple(tuple(S.op[b][a] for b in range(n)) for a in range(n))
        right = tuple(tuple(a for _ in range(n)) for a in range(n))
    else:
        raise InputError(f"unknown shelf variant {variant!r}", witness={"supported": [PRIMAL, MIRROR]})
    B = BraidedSet(n, left, right)
    if variant == PRIMAL:
        assert B.is_right_nondegenerate and B.is_left_nondegenerate == S.is_rack
    else:
        assert B.is_left_nondegenerate and B.is_right_nondegenerate == S.is_rack
    return B


def dihedral_quandle(n: int) -> Shelf:
    """a◁b = 2b - a mod n."""
    return validate_shelf([[(2 * b - a) % n for b in range(n)] for a in range(n)])


def trivial_shelf(n: int) -> Shelf:
    """a◁b = a."""
    return validate_shelf([[a] * n for a in range(n)])
