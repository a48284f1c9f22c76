"""The signed double of a braided set and the toss map.

Encoding on the doubled carrier: a⁺ is index a, a⁻ is index n + a.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..core.errors import PreconditionFailed, RangeError
from ..core.tables import inverse_permutation, is_permutation
from .braided import BraidedSet
from .classify import PropertyReport, classify


@dataclass(frozen=True)
class SignedElement:
    """a⁺ (sign +1) or a⁻ (sign -1)."""

    index: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise RangeError(f"sign must be +1 or -1, got {self.sign}")

    def encode(self, n: int) -> int:
        return self.index if self.sign == 1 else n + self.index

    @classmethod
    def decode(cls, code: int, n: int) -> "SignedElement":
        return cls(code, 1) if code < n else cls(code - n, -1)

    def __str__(self) -> str:
        return f"{self.index}{'+' if self.sign == 1 else '-'}"


def _require_double_ready(B: BraidedSet) -> PropertyReport:
    props = classify(B)
    for name in ("left_nondegenerate", "right_nondegenerate", "invertible", "ri_compatible"):
        if not getattr(props, name):
            raise PreconditionFailed(f"double needs a braiding that is {name}", missing=name)
    return props


def double(B: BraidedSet) -> BraidedSet:
    """Braiding on the 2n signed elements.

    ++: sigma itself.
    --: (a⁻, b⁻) -> (c⁻, d⁻) with sigma(d, c) = (b, a).
    +-: (a⁺, b⁻) -> (c⁻, d⁺) with sigma(d, b) = (c, a).
    -+: (a⁻, b⁺) -> (c⁺, d⁻) with sigma(a, c) = (b, d).

    Raises:
        PreconditionFailed: Naming the missing property
    """
    _require_double_ready(B)
    n = B.size
    size = 2 * n
    left = [[0] * size for _ in range(size)]
    right = [[0] * size for _ in range(size)]
    linv = B.left_inverse_table
    assert linv is not None
    for a in range(n):
        for b in range(n):
            # ++
            left[a][b], right[a][b] = B.sigma(a, b)
            # --
            d, c = B.inverse(b, a)
            left[n + a][n + b], right[n + a][n + b] = n + c, n + d
            # +-
            d = B.hook(b, a)
            c = B.dot(a, b)
            left[a][n + b], right[a][n + b] = n + c, d
            # -+
            c = linv[a][b]
            d = B.right[a][c]
            left[n + a][b], right[n + a][b] = c, n + d
    return BraidedSet(size, tuple(map(tuple, left)), tuple(map(tuple, right)))


def double_t_map(B: BraidedSet) -> Tuple[int, ...]:
    """t̄(a⁺) = t(a)⁺, t̄(a⁻) = t⁻¹(a)⁻ in doubled encoding."""
    props = _require_double_ready(B)
    t = props.t_map
    assert t is not None
    t_inv = inverse_permutation(t)
    n = B.size
    return tuple(t[a] for a in range(n)) + tuple(n + t_inv[a] for a in range(n))


def toss(elements: Sequence[SignedElement], t: Sequence[int]) -> List[SignedElement]:
    """K(a⁺) = a⁺, K(a⁻) = t(a)⁻ componentwise.

    Raises:
        PreconditionFailed: If t is not a bijection
    """
    if not is_permutation(t):
        raise PreconditionFailed("toss needs a bijective t", missing="bijective_t", witness=list(t))
    return [e if e.sign == 1 else SignedElement(t[e.index], -1) for e in elements]
