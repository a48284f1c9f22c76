"""Finite braided sets stored as two index tables."""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Dict, Optional, Sequence, Tuple

from ..core.errors import NotInvertible, NotLeftNondegenerate, SizeMismatch, YbeViolation
from ..core.tables import Table, check_table, invert_columns, is_permutation
from ..utils.logging import get_logger

logger = get_logger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class BraidedSet:
    """A finite set with braiding sigma(a, b) = (left[a][b], right[a][b]).

    left[a][b] is the left component (a acting on b from the left) and
    right[a][b] the right component (a acted on by b). Construct through
    validate_braided_set; derived tables are cached on first use.
    """

    size: int
    left: Table
    right: Table

    def sigma(self, a: int, b: int) -> Pair:
        return self.left[a][b], self.right[a][b]

    @cached_property
    def is_left_nondegenerate(self) -> bool:
        return self.hook_table is not None

    @cached_property
    def is_right_nondegenerate(self) -> bool:
        return all(is_permutation(row) for row in self.left)

    @cached_property
    def hook_table(self) -> Optional[Table]:
        """hook[b][a] = b ⊸ a, the c with c^b = a; None unless LND."""
        return invert_columns(self.right)

    @cached_property
    def dot_table(self) -> Optional[Table]:
        """dot[a][b] = a · b = left[b ⊸ a][b]; None unless LND."""
        hook = self.hook_table
        if hook is None:
            return None
        n = self.size
        return tuple(tuple(self.left[hook[b][a]][b] for b in range(n)) for a in range(n))

    @cached_property
    def left_inverse_table(self) -> Optional[Table]:
        """linv[a][x] = the c with left[a][c] = x; None unless RND."""
        if not self.is_right_nondegenerate:
            return None
        n = self.size
        inv = [[0] * n for _ in range(n)]
        for a in range(n):
            for c in range(n):
                inv[a][self.left[a][c]] = c
        return tuple(tuple(r) for r in inv)

    @cached_property
    def inverse_map(self) -> Optional[Dict[Pair, Pair]]:
        """sigma^{-1} as a pair map; None unless sigma is bijective."""
        inverse: Dict[Pair, Pair] = {}
        for a, b in product(range(self.size), repeat=2):
            inverse[self.sigma(a, b)] = (a, b)
        if len(inverse) != self.size * self.size:
            return None
        return inverse

    @property
    def is_invertible(self) -> bool:
        return self.inverse_map is not None

    def require_lnd(self) -> None:
        """Raise NotLeftNondegenerate unless every right translation is bijective."""
        if self.hook_table is None:
            for b in range(self.size):
                col = [self.right[a][b] for a in range(self.size)]
                if not is_permutation(col):
                    raise NotLeftNondegenerate(witness={"column": b})

    def hook(self, b: int, a: int) -> int:
        """b ⊸ a (inverse right translation of a by b)."""
        assert self.hook_table is not None
        return self.hook_table[b][a]

    def dot(self, a: int, b: int) -> int:
        """a · b, the sideways left output."""
        assert self.dot_table is not None
        return self.dot_table[a][b]

    def inverse(self, c: int, d: int) -> Pair:
        assert self.inverse_map is not None
        return self.inverse_map[(c, d)]

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": "braided_set",
            "size": self.size,
            "left": [list(r) for r in self.left],
            "right": [list(r) for r in self.right],
        }


def ybe_failure(left: Table, right: Table) -> Optional[Tuple[int, int, int]]:
    """Return the first triple violating the YBE, or None."""
    n = len(left)
    for a, b, c in product(range(n), repeat=3):
        # (sigma x Id) then (Id x sigma) then (sigma x Id)
        p, q = left[a][b], right[a][b]
        q2, c2 = left[q][c], right[q][c]
        lhs = (left[p][q2], right[p][q2], c2)
        # (Id x sigma) then (sigma x Id) then (Id x sigma)
        b1, c1 = left[b][c], right[b][c]
        a2, b2 = left[a][b1], right[a][b1]
        rhs = (a2, left[b2][c1], right[b2][c1])
        if lhs != rhs:
            return a, b, c
    return None


def validate_braided_set(left: Sequence[Sequence[int]], right: Sequence[Sequence[int]]) -> BraidedSet:
    """Validate two tables as a braiding.

    Args:
        left: n x n table, left[a][b] = left component of sigma(a, b)
        right: n x n table, right[a][b] = right component of sigma(a, b)

    Returns:
        BraidedSet with the YBE checked on all n^3 triples

    Raises:
        SizeMismatch: Tables are not square of equal size
        RangeError: An entry lies outside [0, n)
        YbeViolation: With the first failing triple as witness
    """
    n = len(left)
    if n == 0:
        raise SizeMismatch("braided set must have at least one element")
    if len(right) != n:
        raise SizeMismatch(f"left has {n} rows, right has {len(right)}")
    lt = check_table(left, n, n, n, "left")
    rt = check_table(right, n, n, n, "right")
    bad = ybe_failure(lt, rt)
    if bad is not None:
        raise YbeViolation(f"Yang-Baxter equation fails at {bad}", witness=list(bad))
    logger.debug("braided set validated", size=n)
    return BraidedSet(n, lt, rt)


def sideways(B: BraidedSet, a: int, b: int) -> Pair:
    """Return (a · b, b ⊸ a).

    b ⊸ a is the unique c with c^b = a, and a · b is the left component of
    sigma(b ⊸ a, b), so sigma(b ⊸ a, b) = (a · b, a).

    Raises:
        NotLeftNondegenerate: If some right translation is not bijective
    """
    B.require_lnd()
    return B.dot(a, b), B.hook(b, a)


def inverse_braiding(B: BraidedSet) -> Dict[Pair, Pair]:
    """sigma^{-1} of an invertible LND braiding, read sideways.

    sigma^{-1}(c, b) = (a ⊸ b, a) where a is the unique element with b · a = c.

    Raises:
        NotLeftNondegenerate: If B is not LND
        NotInvertible: If no such a exists for some pair
    """
    B.require_lnd()
    n = B.size
    result: Dict[Pair, Pair] = {}
    for b in range(n):
        row = [B.dot(b, a) for a in range(n)]
        if not is_permutation(row):
            raise NotInvertible(witness={"row": b})
        for a, c in enumerate(row):
            result[(c, b)] = (B.hook(a, b), a)
    return result
