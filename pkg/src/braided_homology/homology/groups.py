"""Homology groups, orbits and the Betti lower bound."""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from networkx.utils import UnionFind
from sympy import factorint

from ..complexes.chain import ChainComplex, cycle_set_complex
from ..core.errors import NotAComplex, RangeError
from ..core.report import IdentityReport
from ..structures.cycle_set import CycleSet
from ..utils.config import setting
from ..utils.logging import get_logger
from .smith import invariant_factors

logger = get_logger(__name__)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A ≅ ∏ Z/k_i; elements are tuples of residues."""

    moduli: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.moduli:
            raise RangeError("coefficient group needs at least one cyclic factor")
        for k in self.moduli:
            if not isinstance(k, int) or k < 2:
                raise RangeError(f"cyclic factor Z/{k} must have modulus >= 2", witness={"modulus": k})

    @classmethod
    def cyclic(cls, k: int) -> "FiniteAbelianGroup":
        return cls((k,))

    @property
    def order(self) -> int:
        result = 1
        for k in self.moduli:
            result *= k
        return result

    @property
    def zero(self) -> Tuple[int, ...]:
        return (0,) * len(self.moduli)

    def elements(self) -> Iterator[Tuple[int, ...]]:
        return product(*(range(k) for k in self.moduli))

    def add(self, a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
        return tuple((x + y) % k for x, y, k in zip(a, b, self.moduli))

    def sub(self, a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
        return tuple((x - y) % k for x, y, k in zip(a, b, self.moduli))

    def neg(self, a: Sequence[int]) -> Tuple[int, ...]:
        return tuple(-x % k for x, k in zip(a, self.moduli))

    def scale(self, c: int, a: Sequence[int]) -> Tuple[int, ...]:
        return tuple(c * x % k for x, k in zip(a, self.moduli))

    def reduce(self, a: Sequence[int]) -> Tuple[int, ...]:
        return tuple(x % k for x, k in zip(a, self.moduli))

    def rank(self, a: Sequence[int]) -> int:
        """Mixed-radix index of an element, matching the order of elements()."""
        r = 0
        for x, k in zip(a, self.moduli):
            r = r * k + x % k
        return r

    def unrank(self, r: int) -> Tuple[int, ...]:
        if not 0 <= r < self.order:
            raise RangeError(f"rank {r} outside [0, {self.order})", witness={"rank": r})
        digits = []
        for k in reversed(self.moduli):
            r, x = divmod(r, k)
            digits.append(x)
        return tuple(reversed(digits))

    def to_dict(self) -> Dict[str, Any]:
        return {"moduli": list(self.moduli), "order": self.order}

    def __str__(self) -> str:
        return " x ".join(f"Z/{k}" for k in self.moduli)


@dataclass
class HomologyResult:
    """H_k ≅ Z^betti ⊕ ⊕ Z/d for d in torsion."""

    degree: int
    betti: int
    torsion: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"degree": self.degree, "betti": self.betti, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = [f"Z^{self.betti}"] if self.betti else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def homology_at(complex_: ChainComplex, k: int) -> HomologyResult:
    """H_k = ker ∂_k / im ∂_{k+1} through Smith forms.

    Raises:
        DegreeOutOfRange: If ∂_{k+1} was not assembled
        NotAComplex: If ∂_k∂_{k+1} != 0
    """
    lower = complex_.differential(k)
    upper = complex_.differential(k + 1)
    if lower.rows and not (lower @ upper).is_zero():
        raise NotAComplex(f"∂_{k}∂_{k + 1} != 0 in {complex_.name}", witness={"k": k})
    rank_lower = len(invariant_factors(lower)) if lower.rows else 0
    upper_factors = invariant_factors(upper)
    betti = complex_.dims[k] - rank_lower - len(upper_factors)
    return HomologyResult(k, betti, [d for d in upper_factors if d > 1])


def homology_table(complex_: ChainComplex, degrees: Sequence[int]) -> List[HomologyResult]:
    """Homology in several degrees, factoring each ∂ once."""
    factors: Dict[int, List[int]] = {}

    def factors_of(k: int) -> List[int]:
        if k not in factors:
            matrix = complex_.differential(k)
            factors[k] = invariant_factors(matrix) if matrix.rows else []
        return factors[k]

    results = []
    for k in degrees:
        upper = factors_of(k + 1)
        betti = complex_.dims[k] - len(factors_of(k)) - len(upper)
        results.append(HomologyResult(k, betti, [d for d in upper if d > 1]))
    return results


def betti_table(C: CycleSet, max_degree: Optional[int] = None) -> List[HomologyResult]:
    """Homology of the cycle-set complex in degrees 1..max_degree."""
    max_degree = setting(max_degree, "complexes.max_degree")
    complex_ = cycle_set_complex(C, max_degree)
    return homology_table(complex_, range(1, max_degree + 1))


def orbits(C: CycleSet) -> List[List[int]]:
    """Finest partition closed under x ∼ y·x, blocks sorted by least element."""
    uf = UnionFind(range(C.size))
    for y in range(C.size):
        row = C.dot[y]
        for x in range(C.size):
            uf.union(x, row[x])
    blocks = [sorted(block) for block in uf.to_sets()]
    return sorted(blocks)


@dataclass
class BettiBound:
    """β_n against (#orbits)^n."""

    degree: int
    betti: int
    bound: int

    @property
    def passed(self) -> bool:
        return self.betti >= self.bound

    def to_dict(self) -> Dict[str, Any]:
        return {"degree": self.degree, "betti": self.betti, "bound": self.bound, "passed": self.passed}


def betti_bound_check(C: CycleSet, n: int) -> BettiBound:
    """Compute β_n of the cycle-set complex and compare with m^n, m = #orbits."""
    complex_ = cycle_set_complex(C, max(n, 1))
    result = homology_at(complex_, n)
    bound = len(orbits(C)) ** n
    check = BettiBound(n, result.betti, bound)
    if not check.passed:
        logger.warning("betti bound violated", degree=n, betti=result.betti, bound=bound)
    return check


def elementary_divisors(torsion: Sequence[int]) -> List[int]:
    """Prime-power decomposition of ⊕ Z/d, sorted."""
    divisors = []
    for d in torsion:
        for p, e in factorint(d).items():
            divisors.append(int(p) ** e)
    return sorted(divisors)


def invariants_from_divisors(divisors: Sequence[int]) -> List[int]:
    """Regroup prime powers into invariant factors d_1 | d_2 | ..."""
    by_prime: Dict[int, List[int]] = {}
    for q in divisors:
        if q <= 1:
            continue
        (p,) = factorint(q).keys()
        by_prime.setdefault(int(p), []).append(q)
    length = max((len(v) for v in by_prime.values()), default=0)
    invariants = [1] * length
    for powers in by_prime.values():
        powers.sort(reverse=True)
        for j, q in enumerate(powers):
            invariants[length - 1 - j] *= q
    return invariants


def additivity_report(
    whole: ChainComplex,
    parts: Sequence[ChainComplex],
    degrees: Sequence[int],
) -> IdentityReport:
    """Betti numbers add and elementary divisors concatenate across a direct sum."""
    report = IdentityReport("homology_additivity")
    full = homology_table(whole, degrees)
    pieces = [homology_table(p, degrees) for p in parts]
    for idx, k in enumerate(degrees):
        betti_sum = sum(p[idx].betti for p in pieces)
        report.record(full[idx].betti == betti_sum, degree=k, betti=full[idx].betti, parts=betti_sum)
        joined = sorted(q for p in pieces for q in elementary_divisors(p[idx].torsion))
        report.record(
            elementary_divisors(full[idx].torsion) == joined,
            degree=k,
            torsion=full[idx].torsion,
        )
    report.details["degrees"] = list(degrees)
    return report
