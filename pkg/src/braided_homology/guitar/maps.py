"""The guitar map, its inverse, tuple actions and the χ maps.

Tuples are stored 0-based; the ``i`` arguments of chi/chi_prime are 1-based
positions, matching the σ_i / J_i numbering used throughout the docs.
"""

from functools import lru_cache
from typing import Sequence, Tuple

from ..core.errors import IndexOutOfRange
from ..structures.braided import BraidedSet
from ..structures.classify import associated_shelf

Tup = Tuple[int, ...]


def act_right(B: BraidedSet, a: int, word: Sequence[int]) -> int:
    """a^{b_1 b_2 ...}: fold of single right actions, left to right."""
    right = B.right
    for b in word:
        a = right[a][b]
    return a


def act_left(B: BraidedSet, word: Sequence[int], b: int) -> int:
    """^{a_1 ... a_k} b = ^{a_1}( ... (^{a_k} b))."""
    left = B.left
    for a in reversed(word):
        b = left[a][b]
    return b


def tuple_action(B: BraidedSet, xs: Sequence[int], word: Sequence[int]) -> Tup:
    """Adjoint right action x̄^{b̄}: each b crosses x̄ from the right."""
    result = list(xs)
    left, right = B.left, B.right
    for b in word:
        carry = b
        for i in range(len(result) - 1, -1, -1):
            a = result[i]
            result[i], carry = right[a][carry], left[a][carry]
    return tuple(result)


def componentwise_action(B: BraidedSet, xs: Sequence[int], word: Sequence[int]) -> Tup:
    """(x_1, ..., x_n) ↷ b̄ = (x_1^{b̄}, ..., x_n^{b̄})."""
    return tuple(act_right(B, x, word) for x in xs)


def guitar(B: BraidedSet, xs: Sequence[int]) -> Tup:
    """J(x̄)_i = x_i^{x_{i+1} ... x_k}.

    Computed back to front so the whole map costs O(k^2) table lookups.
    """
    right = B.right
    out = list(xs)
    for i in range(len(xs) - 2, -1, -1):
        a = xs[i]
        for b in xs[i + 1:]:
            a = right[a][b]
        out[i] = a
    return tuple(out)


def guitar_inverse(B: BraidedSet, ys: Sequence[int]) -> Tup:
    """Inverse of J for LND braidings.

    x_k = y_k, then x_i = ((y_i ⊸-inverted by x_k) ... by x_{i+1}).

    Raises:
        NotLeftNondegenerate: If B is not LND
    """
    B.require_lnd()
    hook = B.hook_table
    assert hook is not None
    k = len(ys)
    xs = [0] * k
    for i in range(k - 1, -1, -1):
        a = ys[i]
        for j in range(k - 1, i, -1):
            a = hook[xs[j]][a]
        xs[i] = a
    return tuple(xs)


def _check_position(i: int, k: int) -> None:
    if not 1 <= i <= k:
        raise IndexOutOfRange(f"position {i} outside 1..{k}", witness={"i": i, "k": k})


def chi(B: BraidedSet, i: int, ys: Sequence[int]) -> int:
    """χ_i(ȳ) = J⁻¹_1((y_i◁y_{i-1})⋯◁y_1, y_1, …, ŷ_i, …, y_k).

    ◁ is the associated shelf operation.

    Raises:
        NotLeftNondegenerate: If B is not LND
        IndexOutOfRange: Unless 1 <= i <= len(ys)
    """
    _check_position(i, len(ys))
    op = associated_shelf_table(B)
    z = ys[i - 1]
    for j in range(i - 2, -1, -1):
        z = op[z][ys[j]]
    rest = tuple(ys[: i - 1]) + tuple(ys[i:])
    return guitar_inverse(B, (z,) + rest)[0]


def chi_prime(B: BraidedSet, i: int, ys: Sequence[int]) -> int:
    """χ'_i(ȳ) = ^{x_1 … x_{i-1}} x_i where x̄ = J⁻¹(ȳ)."""
    _check_position(i, len(ys))
    xs = guitar_inverse(B, ys)
    return act_left(B, xs[: i - 1], xs[i - 1])


@lru_cache(maxsize=256)
def associated_shelf_table(B: BraidedSet) -> Tuple[Tuple[int, ...], ...]:
    return associated_shelf(B).op


def entwined_sigma(B: BraidedSet, a: int, b: int) -> Tuple[int, int]:
    """σ'(a, b) = (b◁a, a) for the associated shelf."""
    op = associated_shelf_table(B)
    return op[b][a], a


def apply_sigma_at(B: BraidedSet, xs: Sequence[int], i: int) -> Tup:
    """σ_i: apply the braiding at 1-based positions (i, i+1)."""
    out = list(xs)
    out[i - 1], out[i] = B.sigma(xs[i - 1], xs[i])
    return tuple(out)
