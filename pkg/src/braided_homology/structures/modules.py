"""Braided modules over a braided set, and structure-monoid relations."""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.errors import ModuleViolation, SizeMismatch
from ..core.tables import Table, check_table, invert_columns
from .braided import BraidedSet


@dataclass(frozen=True)
class RightBraidedModule:
    """Right action action[p][a] = p·a with (p·a)·b = (p·ᵃb)·aᵇ."""

    carrier_size: int
    action: Table
    base_size: int

    @cached_property
    def inverse_action(self) -> Optional[Table]:
        """inv[a][q] = the p with p·a = q; None unless solid."""
        return invert_columns(self.action)

    @property
    def solid(self) -> bool:
        return self.inverse_action is not None

    def act(self, p: int, a: int) -> int:
        return self.action[p][a]

    def act_inverse(self, q: int, a: int) -> int:
        """q·a⁻¹."""
        assert self.inverse_action is not None
        return self.inverse_action[a][q]

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": "right_module",
            "carrier": self.carrier_size,
            "action": [list(r) for r in self.action],
        }


@dataclass(frozen=True)
class LeftBraidedModule:
    """Left action action[a][q] = a·q with a·(b·q) = ᵃb·(aᵇ·q)."""

    carrier_size: int
    action: Table
    base_size: int

    def act(self, a: int, q: int) -> int:
        return self.action[a][q]

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": "left_module",
            "carrier": self.carrier_size,
            "action": [list(r) for r in self.action],
        }


def validate_right_module(B: BraidedSet, action: Sequence[Sequence[int]]) -> RightBraidedModule:
    """Check (p·a)·b = (p·ᵃb)·aᵇ on all m·n² triples.

    Raises:
        SizeMismatch, RangeError: Malformed table
        ModuleViolation: With the failing (p, a, b)
    """
    m = len(action)
    if m == 0:
        raise SizeMismatch("module carrier must be non-empty")
    t = check_table(action, m, B.size, m, "action")
    for p, a, b in product(range(m), range(B.size), range(B.size)):
        la, ra = B.sigma(a, b)
        if t[t[p][a]][b] != t[t[p][la]][ra]:
            raise ModuleViolation(
                f"right module compatibility fails at {(p, a, b)}", witness=[p, a, b]
            )
    return RightBraidedModule(m, t, B.size)


def validate_left_module(B: BraidedSet, action: Sequence[Sequence[int]]) -> LeftBraidedModule:
    """Check a·(b·q) = ᵃb·(aᵇ·q) on all n²·m triples.

    Raises:
        SizeMismatch, RangeError: Malformed table
        ModuleViolation: With the failing (a, b, q)
    """
    if len(action) != B.size:
        raise SizeMismatch(f"left action needs {B.size} rows, got {len(action)}")
    m = len(action[0]) if action else 0
    if m == 0:
        raise SizeMismatch("module carrier must be non-empty")
    t = check_table(action, B.size, m, m, "action")
    for a, b, q in product(range(B.size), range(B.size), range(m)):
        la, ra = B.sigma(a, b)
        if t[a][t[b][q]] != t[la][t[ra][q]]:
            raise ModuleViolation(
                f"left module compatibility fails at {(a, b, q)}", witness=[a, b, q]
            )
    return LeftBraidedModule(m, t, B.size)


def trivial_right_module(B: BraidedSet) -> RightBraidedModule:
    return RightBraidedModule(1, tuple((0,) * B.size for _ in range(1)), B.size)


def trivial_left_module(B: BraidedSet) -> LeftBraidedModule:
    return LeftBraidedModule(1, tuple((0,) for _ in range(B.size)), B.size)


def adjoint_right_module(B: BraidedSet) -> RightBraidedModule:
    """M = X with p·a = p^a."""
    return validate_right_module(B, B.right)


def adjoint_left_module(B: BraidedSet) -> LeftBraidedModule:
    """N = X with a·q = ᵃq."""
    return validate_left_module(B, B.left)


def sideways_left_module(B: BraidedSet, star: bool = False) -> LeftBraidedModule:
    """N = X with a·q the sideways dot (or a⊸q when star is set).

    Both actions satisfy the left module condition exactly when B is an LND
    braiding; they are the coefficients that turn the birack complexes into
    the cycle-set style complexes on X^n.
    """
    B.require_lnd()
    n = B.size
    if star:
        action = [[B.hook(a, q) for q in range(n)] for a in range(n)]
    else:
        action = [[B.dot(a, q) for q in range(n)] for a in range(n)]
    return validate_left_module(B, action)


Word = Tuple[int, ...]


def structure_relations(B: BraidedSet) -> List[Tuple[Word, Word]]:
    """Defining relations ab = ᵃb·aᵇ of the structure monoid.

    Trivial relations (where sigma fixes the pair) are omitted.
    """
    relations = []
    for a, b in product(range(B.size), repeat=2):
        image = B.sigma(a, b)
        if image != (a, b):
            relations.append(((a, b), image))
    return relations
