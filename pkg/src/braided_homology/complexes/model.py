"""Basis-level chain models: boundary and degeneracy maps on M x X^k x N.

A basis element of C_k is a flat tuple (m, x_1, ..., x_k, q) with m in the
right module M and q in the left module N; trivial coefficients use the
one-point modules, so m = q = 0. Bases are enumerated lexicographically and
indexed in mixed radix (|M|, n, ..., n, |N|). Boundary positions i are
1-based.
"""

import copy
from itertools import product
from typing import Iterator, Optional, Sequence, Tuple

from ..core.errors import (
    DegreeOutOfRange,
    IndexOutOfRange,
    InputError,
    NoDegeneracies,
    NotInvertible,
    PreconditionFailed,
)
from ..guitar.maps import chi
from ..structures.braided import BraidedSet
from ..structures.classify import classify
from ..structures.modules import (
    LeftBraidedModule,
    RightBraidedModule,
    trivial_left_module,
    trivial_right_module,
)
from ..utils.config import setting
from ..utils.logging import get_logger

logger = get_logger(__name__)

Elem = Tuple[int, ...]

PRE_CUBICAL = "pre-cubical"
SEMI_STRONG = "semi-strong skew cubical"
CUBICAL = "cubical"

LEFT_PLUS, LEFT_MINUS, RIGHT_PLUS, RIGHT_MINUS = "l+", "l-", "r+", "r-"
SIGN_CHOICES: Tuple[Tuple[str, str], ...] = (
    (LEFT_PLUS, RIGHT_MINUS),
    (LEFT_MINUS, RIGHT_MINUS),
    (LEFT_PLUS, RIGHT_PLUS),
    (LEFT_MINUS, RIGHT_PLUS),
)


class BasisChainModel:
    """Two families of basis-to-basis boundaries d⁺_i, d⁻_i and optional s_i.

    Subclasses implement ``_d_plus``, ``_d_minus`` and, when they carry
    degeneracies, ``_s``. ``suite`` names the relation family the model is
    declared to satisfy.
    """

    flavor = "abstract"

    def __init__(
        self,
        B: BraidedSet,
        M: Optional[RightBraidedModule] = None,
        N: Optional[LeftBraidedModule] = None,
        max_degree: Optional[int] = None,
    ):
        self.B = B
        self.M = M if M is not None else trivial_right_module(B)
        self.N = N if N is not None else trivial_left_module(B)
        self.max_degree: int = setting(max_degree, "complexes.max_degree")
        self.degeneracies: Optional[str] = None
        self.suite = PRE_CUBICAL

    @property
    def has_degeneracies(self) -> bool:
        return self.degeneracies is not None

    @property
    def trivial_coefficients(self) -> bool:
        return self.M.carrier_size == 1 and self.N.carrier_size == 1

    def dim(self, k: int) -> int:
        return self.M.carrier_size * self.B.size**k * self.N.carrier_size

    def basis(self, k: int) -> Iterator[Elem]:
        n = self.B.size
        ranges = [range(self.M.carrier_size)] + [range(n)] * k + [range(self.N.carrier_size)]
        return product(*ranges)

    def index(self, e: Sequence[int]) -> int:
        n = self.B.size
        idx = e[0]
        for x in e[1:-1]:
            idx = idx * n + x
        return idx * self.N.carrier_size + e[-1]

    def check_degree(self, k: int) -> None:
        """Chain degrees run from 0 to max_degree + 1.

        Raises:
            DegreeOutOfRange: Outside that range
        """
        if not 0 <= k <= self.max_degree + 1:
            raise DegreeOutOfRange(
                f"degree {k} outside 0..{self.max_degree + 1}",
                witness={"k": k, "max_degree": self.max_degree},
            )

    def d_plus(self, k: int, i: int, e: Elem) -> Elem:
        return self._d_plus(k, i, e)

    def d_minus(self, k: int, i: int, e: Elem) -> Elem:
        return self._d_minus(k, i, e)

    def boundary(self, sign: int, k: int, i: int, e: Elem) -> Elem:
        """d⁺_i for sign +1, d⁻_i for sign -1."""
        return self._d_plus(k, i, e) if sign > 0 else self._d_minus(k, i, e)

    def s(self, k: int, i: int, e: Elem) -> Elem:
        """Degeneracy s_i: C_k -> C_{k+1}, 1 <= i <= k.

        Raises:
            NoDegeneracies: If the model carries none
            IndexOutOfRange: Unless 1 <= i <= k
        """
        if self.degeneracies is None:
            raise NoDegeneracies(witness={"flavor": self.flavor})
        if not 1 <= i <= k:
            raise IndexOutOfRange(f"degeneracy s_{i} undefined on C_{k}", witness={"i": i, "k": k})
        return self._s(k, i, e)

    def with_degeneracies(self, kind: str) -> "BasisChainModel":
        model = copy.copy(self)
        model.degeneracies = kind
        model.suite = SEMI_STRONG
        return model

    def describe(self) -> dict:
        return {
            "flavor": self.flavor,
            "size": self.B.size,
            "module_m": self.M.carrier_size,
            "module_n": self.N.carrier_size,
            "degeneracies": self.degeneracies,
            "suite": self.suite,
        }

    def _d_plus(self, k: int, i: int, e: Elem) -> Elem:
        raise NotImplementedError

    def _d_minus(self, k: int, i: int, e: Elem) -> Elem:
        raise NotImplementedError

    def _s(self, k: int, i: int, e: Elem) -> Elem:
        raise NotImplementedError


class BraidedFamily(BasisChainModel):
    """d^{l,±}_i = ρ∘σ^{±1}_1∘⋯∘σ^{±1}_{i-1} and d^{r,±}_i = λ∘σ^{±1}_{k-1}∘⋯∘σ^{±1}_i.

    The left family is d⁺ and the right family d⁻.
    """

    flavor = "braided"

    def __init__(
        self,
        B: BraidedSet,
        M: Optional[RightBraidedModule] = None,
        N: Optional[LeftBraidedModule] = None,
        sign_choice: Tuple[str, str] = (LEFT_PLUS, RIGHT_MINUS),
        max_degree: Optional[int] = None,
    ):
        if tuple(sign_choice) not in SIGN_CHOICES:
            raise InputError(
                f"unknown sign choice {sign_choice!r}", witness={"supported": [list(s) for s in SIGN_CHOICES]}
            )
        if (LEFT_MINUS in sign_choice or RIGHT_PLUS in sign_choice) and not B.is_invertible:
            raise NotInvertible(
                f"sign choice {sign_choice[0]},{sign_choice[1]} needs an invertible braiding"
            )
        super().__init__(B, M, N, max_degree)
        self.sign_choice = tuple(sign_choice)
        self._left_pair = B.sigma if sign_choice[0] == LEFT_PLUS else B.inverse
        self._right_pair = B.sigma if sign_choice[1] == RIGHT_MINUS else B.inverse

    def _d_plus(self, k: int, i: int, e: Elem) -> Elem:
        xs = list(e[1:-1])
        pair = self._left_pair
        for p in range(i - 1, 0, -1):
            xs[p - 1], xs[p] = pair(xs[p - 1], xs[p])
        return (self.M.act(e[0], xs[0]), *xs[1:], e[-1])

    def _d_minus(self, k: int, i: int, e: Elem) -> Elem:
        xs = list(e[1:-1])
        pair = self._right_pair
        for p in range(i, k):
            xs[p - 1], xs[p] = pair(xs[p - 1], xs[p])
        return (e[0], *xs[:-1], self.N.act(xs[-1], e[-1]))

    def describe(self) -> dict:
        result = super().describe()
        result["sign_choice"] = list(self.sign_choice)
        return result


class BirackFamily(BasisChainModel):
    """d⁻_i = d_i (sideways actions of y_i) and d⁺_i = d'_i (deletion, m·χ_i)."""

    flavor = "birack"

    def __init__(
        self,
        B: BraidedSet,
        M: Optional[RightBraidedModule] = None,
        N: Optional[LeftBraidedModule] = None,
        max_degree: Optional[int] = None,
    ):
        B.require_lnd()
        super().__init__(B, M, N, max_degree)

    def _before(self, y: int, x: int) -> int:
        return self.B.hook(y, x)

    def _after(self, y: int, x: int) -> int:
        return self.B.dot(y, x)

    def _d_minus(self, k: int, i: int, e: Elem) -> Elem:
        xs = e[1:-1]
        y = xs[i - 1]
        head = tuple(self._before(y, x) for x in xs[: i - 1])
        tail = tuple(self._after(y, x) for x in xs[i:])
        return (e[0],) + head + tail + (self.N.act(y, e[-1]),)

    def _d_plus(self, k: int, i: int, e: Elem) -> Elem:
        xs = e[1:-1]
        m = e[0]
        if self.M.carrier_size > 1:
            m = self.M.act(m, chi(self.B, i, xs))
        return (m,) + xs[: i - 1] + xs[i:] + (e[-1],)

    def _s(self, k: int, i: int, e: Elem) -> Elem:
        xs = e[1:-1]
        m = e[0]
        if self.degeneracies == "coeff" and self.M.carrier_size > 1:
            c = chi(self.B, i, xs)
            m = self.M.act_inverse(m, self.B.dot(c, c))
        return (m,) + xs[:i] + xs[i - 1:] + (e[-1],)


class StarFamily(BirackFamily):
    """d*_i: · before position i and ⊸ after it; d'_i as in the birack family."""

    flavor = "star"

    def _before(self, y: int, x: int) -> int:
        return self.B.dot(y, x)

    def _after(self, y: int, x: int) -> int:
        return self.B.hook(y, x)


def braided_family(
    B: BraidedSet,
    M: Optional[RightBraidedModule] = None,
    N: Optional[LeftBraidedModule] = None,
    sign_choice: Tuple[str, str] = (LEFT_PLUS, RIGHT_MINUS),
    max_degree: Optional[int] = None,
) -> BraidedFamily:
    """Braided boundaries of M x X^k x N.

    Raises:
        NotInvertible: For sign choices using σ⁻¹ on a non-invertible braiding
    """
    return BraidedFamily(B, M, N, sign_choice, max_degree)


def birack_family(
    B: BraidedSet,
    M: Optional[RightBraidedModule] = None,
    N: Optional[LeftBraidedModule] = None,
    max_degree: Optional[int] = None,
) -> BirackFamily:
    """Guitar-side boundaries d_i, d'_i.

    Raises:
        NotLeftNondegenerate: If B is not LND
    """
    return BirackFamily(B, M, N, max_degree)


def birack_star_family(
    B: BraidedSet,
    N: Optional[LeftBraidedModule] = None,
    max_degree: Optional[int] = None,
) -> StarFamily:
    """Star boundaries d*_i with d'_i; M is the one-point module.

    N should be trivial or the ⊸ sideways module for the relations to hold.

    Raises:
        NotLeftNondegenerate: If B is not LND
    """
    return StarFamily(B, None, N, max_degree)


def _require_weak_ri(B: BraidedSet) -> None:
    B.require_lnd()
    if not classify(B).weakly_ri_compatible:
        bad = next(a for a in range(B.size) if B.dot(a, a) != B.hook(a, a))
        raise PreconditionFailed(
            "degeneracies need a·a = a⊸a for every a",
            missing="weakly_ri_compatible",
            witness={"element": bad},
        )


def _verify(model: BasisChainModel, verify_degree: int) -> BasisChainModel:
    from .relations import check_relations

    if verify_degree > 0:
        report = check_relations(model, verify_degree)
        if not report.passed:
            logger.warning("relation suite failed", suite=model.suite, witness=report.first_failure())
            raise PreconditionFailed(
                f"{model.suite} relations fail",
                missing=model.suite.replace(" ", "_"),
                witness=report.first_failure(),
            )
        logger.debug("relation suite verified", suite=model.suite, checked=report.checked)
    return model


def degeneracies_coeff(
    B: BraidedSet,
    M: Optional[RightBraidedModule] = None,
    N: Optional[LeftBraidedModule] = None,
    max_degree: Optional[int] = None,
    verify_degree: int = 3,
) -> BirackFamily:
    """Birack family with s_i(m,ȳ,q) = (m·t(χ_i(ȳ))⁻¹, y_1..y_i, y_i..y_k, q).

    The semi-strong skew cubical relations are verified on all basis
    elements of degree <= verify_degree (0 skips the check).

    Raises:
        PreconditionFailed: Naming the missing property (weak RI-compatibility
            or solidity of M)
    """
    _require_weak_ri(B)
    if M is not None and not M.solid:
        raise PreconditionFailed("degeneracies need a solid right module", missing="solid")
    model = birack_family(B, M, N, max_degree).with_degeneracies("coeff")
    return _verify(model, verify_degree)


def degeneracies_plain(
    B: BraidedSet,
    star: bool = False,
    max_degree: Optional[int] = None,
    verify_degree: int = 3,
) -> BirackFamily:
    """Trivial-coefficient birack (or star) family with diagonal doubling s_i.

    Raises:
        PreconditionFailed: If a·a != a⊸a for some a
    """
    _require_weak_ri(B)
    family = birack_star_family(B, None, max_degree) if star else birack_family(B, None, None, max_degree)
    return _verify(family.with_degeneracies("plain"), verify_degree)  # type: ignore[return-value]
