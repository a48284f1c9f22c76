"""Cohomology of the cycle-set and LND complexes with finite coefficients."""

from dataclasses import dataclass, field
from math import gcd
from typing import Any, Dict, List, Optional, Union

from ..complexes.chain import ChainComplex, cycle_set_complex, lnd_complex
from ..core.errors import UnsupportedDegree
from ..core.matrix import IntMatrix
from ..core.report import IdentityReport
from ..structures.braided import BraidedSet
from ..structures.cycle_set import CycleSet
from ..utils.logging import get_logger
from .groups import FiniteAbelianGroup, elementary_divisors, invariants_from_divisors, orbits
from .smith import smith_normal_form

logger = get_logger(__name__)


@dataclass
class CohomologyResult:
    """Orders of Z^n and B^n, and H^n = Z^n / B^n by invariant factors."""

    degree: int
    coefficients: FiniteAbelianGroup
    cocycles: int
    coboundaries: int
    invariants: List[int] = field(default_factory=list)
    orbit_check: Optional[IdentityReport] = None

    @property
    def order(self) -> int:
        return self.cocycles // self.coboundaries

    @property
    def passed(self) -> bool:
        return self.orbit_check is None or self.orbit_check.passed

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        result: Dict[str, Any] = {
            "degree": self.degree,
            "coefficients": list(self.coefficients.moduli),
            "cocycles": self.cocycles,
            "coboundaries": self.coboundaries,
            "order": self.order,
            "invariants": list(self.invariants),
        }
        if self.orbit_check is not None:
            result["orbit_check"] = self.orbit_check.to_dict()
        return result


@dataclass
class _CyclicPiece:
    cocycles: int
    coboundaries: int
    invariants: List[int]


def _cyclic_cohomology(upper: IntMatrix, lower: IntMatrix, k: int) -> _CyclicPiece:
    """H^n with Z/k coefficients from ∂_{n+1} (upper) and ∂_n (lower).

    Cochains are column vectors f on C_n. Z^n = {f : ∂_{n+1}ᵀ f ≡ 0}; with
    U·∂_{n+1}ᵀ·V = D and g = V⁻¹f the conditions decouple into d_i g_i ≡ 0.
    Z^n ≅ ⊕ Z/e_i with e_i = gcd(d_i, k) (e_i = k past the rank), and
    B^n is generated by the columns of ∂_nᵀ rewritten in those coordinates.
    """
    c = upper.rows
    form = smith_normal_form(upper.transpose(), transforms=True, inverse=True)
    assert form.V_inv is not None
    moduli = [gcd(d, k) for d in form.invariants] + [k] * (c - form.rank)
    cocycles = 1
    for e in moduli:
        cocycles *= e

    generators = form.V_inv @ lower.transpose() if lower.rows else IntMatrix.zeros(c, 0)
    diagonal = IntMatrix([[moduli[i] if i == j else 0 for j in range(c)] for i in range(c)], c, c)
    step = [k // e for e in moduli]
    images = []
    for column in generators.columns():
        z = []
        for i, g in enumerate(column):
            g %= k
            assert g % step[i] == 0, "coboundary outside the cocycle lattice"
            z.append(g // step[i] % moduli[i])
        images.append(z)
    presentation = diagonal.hstack(IntMatrix.from_columns(images, c))
    quotient = [d for d in smith_normal_form(presentation, transforms=False).invariants if d > 1]

    coboundaries = 1
    if lower.rows:
        for d in smith_normal_form(lower, transforms=False).invariants:
            coboundaries *= k // gcd(d, k)
    return _CyclicPiece(cocycles, coboundaries, quotient)


def complex_for(target: Union[CycleSet, BraidedSet], degree: int, star: bool = False) -> ChainComplex:
    if isinstance(target, CycleSet):
        return cycle_set_complex(target, degree)
    return lnd_complex(target, degree, star=star)


def cohomology_groups(
    target: Union[CycleSet, BraidedSet],
    degree: int,
    A: FiniteAbelianGroup,
    star: bool = False,
) -> CohomologyResult:
    """Z^n, B^n and H^n of the cycle-set complex (or the LND complex of a braided set).

    Each cyclic factor of A is handled separately and the pieces are
    combined as a direct product.

    Raises:
        UnsupportedDegree: Unless degree is 1 or 2
        NotLeftNondegenerate: For a braided set that is not LND
    """
    if degree not in (1, 2):
        raise UnsupportedDegree(f"cohomology in degree {degree} is not supported", witness={"degree": degree})
    complex_ = complex_for(target, degree, star)
    upper = complex_.differential(degree + 1)
    lower = complex_.differential(degree)

    cocycles, coboundaries = 1, 1
    divisors: List[int] = []
    for k in A.moduli:
        piece = _cyclic_cohomology(upper, lower, k)
        cocycles *= piece.cocycles
        coboundaries *= piece.coboundaries
        divisors += elementary_divisors(piece.invariants)
    result = CohomologyResult(degree, A, cocycles, coboundaries, invariants_from_divisors(divisors))

    if degree == 1 and isinstance(target, CycleSet):
        result.orbit_check = orbit_count_report(target, A, result.order)
        if not result.orbit_check.passed:
            logger.error("H^1 disagrees with the orbit count", **result.orbit_check.first_failure())
    logger.debug("cohomology computed", degree=degree, cocycles=cocycles, coboundaries=coboundaries)
    return result


def first_cohomology_by_orbits(C: CycleSet, A: FiniteAbelianGroup) -> int:
    """|H¹(C; A)| = |A|^{#orbits}: 1-cocycles are the maps constant on orbits."""
    return A.order ** len(orbits(C))


def orbit_count_report(C: CycleSet, A: FiniteAbelianGroup, order: int) -> IdentityReport:
    """Compare a computed |H¹(C; A)| with |A|^{#orbits}."""
    report = IdentityReport("first_cohomology_orbit_count")
    expected = first_cohomology_by_orbits(C, A)
    report.record(order == expected, order=order, expected=expected)
    report.details["orbits"] = len(orbits(C))
    return report
