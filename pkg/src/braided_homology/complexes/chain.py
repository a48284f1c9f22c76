"""Differential matrices and integer chain complexes."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..core.errors import DegreeOutOfRange, NotAComplex
from ..core.matrix import IntMatrix
from ..core.report import IdentityReport
from ..structures.braided import BraidedSet
from ..structures.cycle_set import CycleSet, from_cycle_set
from ..structures.modules import sideways_left_module
from ..utils.config import setting
from ..utils.logging import get_logger
from .model import BasisChainModel, BirackFamily, StarFamily

logger = get_logger(__name__)


@dataclass(frozen=True)
class AlphaBeta:
    """Weights of ∂ = α Σ(-1)^{i-1} d⁺_i + β Σ(-1)^{i-1} d⁻_i."""

    alpha: int = 1
    beta: int = -1

    def to_dict(self) -> Dict[str, int]:
        return {"alpha": self.alpha, "beta": self.beta}

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta})"


DEFAULT_AB = AlphaBeta(1, -1)
TESTED_ALPHA_BETAS: Tuple[AlphaBeta, ...] = (
    AlphaBeta(1, -1),
    AlphaBeta(1, 1),
    AlphaBeta(0, 1),
    AlphaBeta(2, 3),
)


@dataclass
class ChainComplex:
    """Free chain complex: dims[k] = rank C_k and differentials[k] = ∂_k: C_k -> C_{k-1}."""

    name: str
    dims: List[int]
    differentials: Dict[int, IntMatrix] = field(default_factory=dict)
    model: Optional[BasisChainModel] = field(default=None, repr=False, compare=False)

    @property
    def top(self) -> int:
        return max(self.differentials) if self.differentials else 0

    def differential(self, k: int) -> IntMatrix:
        """∂_k; ∂_0 is the zero map to the zero module.

        Raises:
            DegreeOutOfRange: If ∂_k was not assembled
        """
        if k == 0:
            return IntMatrix.zeros(0, self.dims[0])
        if k not in self.differentials:
            raise DegreeOutOfRange(
                f"{self.name} has no differential in degree {k}",
                witness={"k": k, "top": self.top},
            )
        return self.differentials[k]

    def square_report(self) -> IdentityReport:
        report = IdentityReport("boundary_squared")
        for k in sorted(self.differentials):
            if k - 1 in self.differentials:
                product = self.differentials[k - 1] @ self.differentials[k]
                report.record(product.is_zero(), k=k)
        return report

    def check(self) -> "ChainComplex":
        """Verify ∂_{k-1}∂_k = 0 for every assembled pair.

        Raises:
            NotAComplex: With the first failing degree
        """
        report = self.square_report()
        if not report.passed:
            raise NotAComplex(f"{self.name}: boundary of boundary is not zero", witness=report.first_failure())
        return self

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "dims": list(self.dims),
            "differentials": {str(k): [m.rows, m.cols] for k, m in sorted(self.differentials.items())},
        }


def differential_matrix(model: BasisChainModel, k: int, ab: AlphaBeta = DEFAULT_AB) -> IntMatrix:
    """Matrix of ∂_k in the enumerated bases, shape dim(k-1) x dim(k).

    Raises:
        DegreeOutOfRange: Unless 1 <= k <= max_degree + 1
    """
    if k < 1:
        raise DegreeOutOfRange(f"differential degree must be >= 1, got {k}", witness={"k": k})
    model.check_degree(k)
    rows = model.dim(k - 1)
    columns = []
    for e in model.basis(k):
        col = [0] * rows
        for i in range(1, k + 1):
            sign = 1 if i % 2 else -1
            if ab.alpha:
                col[model.index(model.d_plus(k, i, e))] += sign * ab.alpha
            if ab.beta:
                col[model.index(model.d_minus(k, i, e))] += sign * ab.beta
        columns.append(col)
    return IntMatrix.from_columns(columns, rows)


def chain_complex(
    model: BasisChainModel,
    ab: AlphaBeta = DEFAULT_AB,
    top: Optional[int] = None,
    name: Optional[str] = None,
) -> ChainComplex:
    """Assemble ∂_1..∂_top (top defaults to max_degree + 1) and verify ∂∂ = 0.

    Raises:
        DegreeOutOfRange: If top exceeds the degree bound
        NotAComplex: If ∂∂ != 0
    """
    top = model.max_degree + 1 if top is None else top
    model.check_degree(top)
    differentials = {k: differential_matrix(model, k, ab) for k in range(1, top + 1)}
    complex_ = ChainComplex(
        name or f"{model.flavor}{ab}",
        [model.dim(k) for k in range(top + 1)],
        differentials,
        model,
    )
    logger.debug("complex assembled", name=complex_.name, dims=complex_.dims)
    return complex_.check()


def _shifted_complex(model: BasisChainModel, name: str, top: int) -> ChainComplex:
    """C_n = Z·X^n from a model on X^{n-1} x N with N = X, and ∂_1 = 0."""
    n = model.B.size
    dims = [1] + [n**k for k in range(1, top + 1)]
    differentials = {1: IntMatrix.zeros(1, n)}
    for k in range(2, top + 1):
        differentials[k] = differential_matrix(model, k - 1, DEFAULT_AB)
    return ChainComplex(name, dims, differentials, model).check()


def cycle_set_complex(C: CycleSet, max_degree: Optional[int] = None) -> ChainComplex:
    """∂_n(x̄) = Σ_{i<n} (-1)^{i-1}[(x̄ without x_i) - (x_i·x_1, …, x̂_i, …, x_i·x_n)], ∂_1 = 0.

    Homology is available in degrees <= max_degree; the complex carries
    differentials up to max_degree + 1.
    """
    max_degree = setting(max_degree, "complexes.max_degree")
    B = from_cycle_set(C)
    model = BirackFamily(B, None, sideways_left_module(B), max_degree)
    return _shifted_complex(model, "cycle_set", max_degree + 1)


def lnd_complex(B: BraidedSet, max_degree: Optional[int] = None, star: bool = False) -> ChainComplex:
    """Cochain-ready complex on Z·X^n of an LND braided set.

    ∂_n = Σ_{i<n} (-1)^{i-1}[(x̄ without x_i) - (x_i⊸x_1, …, x_i⊸x_{i-1}, x_i·x_{i+1}, …, x_i·x_n)];
    star swaps · and ⊸.

    Raises:
        NotLeftNondegenerate: If B is not LND
    """
    max_degree = setting(max_degree, "complexes.max_degree")
    N = sideways_left_module(B, star=star)
    model: BasisChainModel
    if star:
        model = StarFamily(B, None, N, max_degree)
    else:
        model = BirackFamily(B, None, N, max_degree)
    return _shifted_complex(model, "lnd_star" if star else "lnd", max_degree + 1)
