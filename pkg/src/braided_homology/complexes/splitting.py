"""Degenerate/normalized splitting of semi-strong skew cubical models."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from ..core.errors import NoDegeneracies, SplittingFailure
from ..core.matrix import IntMatrix
from ..homology.smith import smith_normal_form
from ..utils.logging import get_logger
from .chain import TESTED_ALPHA_BETAS, AlphaBeta, ChainComplex, differential_matrix
from .model import SEMI_STRONG, BasisChainModel, Elem

logger = get_logger(__name__)

Vector = Dict[Elem, int]


def _require_splittable(model: BasisChainModel) -> None:
    if not model.has_degeneracies or model.suite != SEMI_STRONG:
        raise NoDegeneracies(
            "splitting needs a semi-strong skew cubical model",
            witness={"flavor": model.flavor, "suite": model.suite},
        )


def _apply_p(model: BasisChainModel, k: int, i: int, vec: Vector) -> Vector:
    """p_i = Id - s_i d⁺_{i+1} on C_k."""
    out = dict(vec)
    for e, c in vec.items():
        f = model.s(k - 1, i, model.d_plus(k, i + 1, e))
        out[f] = out.get(f, 0) - c
    return {e: c for e, c in out.items() if c}


def eta_vector(model: BasisChainModel, k: int, e: Elem) -> Vector:
    vec: Vector = {e: 1}
    for i in range(k - 1, 0, -1):
        vec = _apply_p(model, k, i, vec)
    return vec


def eta_projector(model: BasisChainModel, k: int) -> IntMatrix:
    """η_k = (Id - s_1 d⁺_2)⋯(Id - s_{k-1} d⁺_k) on C_k; the identity for k <= 1.

    Raises:
        NoDegeneracies: Unless the model is semi-strong skew cubical
    """
    _require_splittable(model)
    model.check_degree(k)
    rows = model.dim(k)
    columns = []
    for e in model.basis(k):
        col = [0] * rows
        for f, c in eta_vector(model, k, e).items():
            col[model.index(f)] = c
        columns.append(col)
    return IntMatrix.from_columns(columns, rows)


def degenerate_indices(model: BasisChainModel, k: int) -> List[int]:
    """Indices of the basis vectors spanning Σ_{i<k} Im s_i in C_k."""
    _require_splittable(model)
    if k < 2:
        return []
    found = set()
    for e in model.basis(k - 1):
        for i in range(1, k):
            found.add(model.index(model.s(k - 1, i, e)))
    return sorted(found)


@dataclass
class SplitCertificate:
    """C_k = C^D_k ⊕ C^N_k, certified over the integers."""

    degree: int
    dim: int
    degenerate_rank: int
    normalized_rank: int
    degenerate_basis: List[Elem]
    invariant_under: List[str]
    projector: IntMatrix = field(repr=False)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "degree": self.degree,
            "dim": self.dim,
            "degenerate_rank": self.degenerate_rank,
            "normalized_rank": self.normalized_rank,
            "degenerate_basis": [list(e) for e in self.degenerate_basis],
            "invariant_under": self.invariant_under,
            "certified": True,
        }


def _fail(message: str, **witness: Any) -> SplittingFailure:
    logger.warning("splitting certificate failed", reason=message, **witness)
    return SplittingFailure(message, witness=witness)


def split(
    model: BasisChainModel,
    k: int,
    alpha_betas: Sequence[AlphaBeta] = TESTED_ALPHA_BETAS,
) -> SplitCertificate:
    """Certify C_k = (Σ Im s_i) ⊕ Im η_k and its ∂-invariance.

    The certificate checks that η_k kills every degenerate basis vector,
    that Id - η_k lands in their span, that the Smith form of [S | η_k] has
    full rank with unit invariant factors and that rank S + rank η_k = dim C_k.
    For each (α, β), ∂ maps degenerate chains into ker η_{k-1} and
    normalized chains into Im η_{k-1}.

    Raises:
        NoDegeneracies: Unless the model is semi-strong skew cubical
        SplittingFailure: With a witness, if any check fails
    """
    _require_splittable(model)
    dim = model.dim(k)
    degenerate = degenerate_indices(model, k)
    eta = eta_projector(model, k)

    for j in degenerate:
        if any(eta.column(j)):
            raise _fail("η does not vanish on a degenerate vector", degree=k, column=j)
    in_span = set(degenerate)
    complement = IntMatrix.identity(dim) - eta
    for i in range(dim):
        if i not in in_span and any(complement.row(i)):
            raise _fail("Id - η leaves the degenerate span", degree=k, row=i)

    S = IntMatrix.identity(dim).select_columns(degenerate)
    joint = smith_normal_form(S.hstack(eta), transforms=False).invariants
    eta_rank = smith_normal_form(eta, transforms=False).rank
    if len(joint) != dim or any(d != 1 for d in joint):
        raise _fail("degenerate and normalized parts do not span C_k", degree=k, rank=len(joint))
    if len(degenerate) + eta_rank != dim:
        raise _fail("ranks do not add up", degree=k, degenerate=len(degenerate), normalized=eta_rank)

    checked = []
    if k >= 1:
        below = eta_projector(model, k - 1)
        below_complement = IntMatrix.identity(model.dim(k - 1)) - below
        for ab in alpha_betas:
            boundary = differential_matrix(model, k, ab)
            if not (below @ boundary @ S).is_zero():
                raise _fail("∂ moves degenerate chains out of C^D", degree=k, alpha_beta=str(ab))
            if not (below_complement @ boundary @ eta).is_zero():
                raise _fail("∂ moves normalized chains out of C^N", degree=k, alpha_beta=str(ab))
            checked.append(str(ab))

    basis = list(model.basis(k))
    return SplitCertificate(
        degree=k,
        dim=dim,
        degenerate_rank=len(degenerate),
        normalized_rank=eta_rank,
        degenerate_basis=[basis[j] for j in degenerate],
        invariant_under=checked,
        projector=eta,
    )


def split_complexes(
    model: BasisChainModel,
    ab: AlphaBeta,
    top: int,
) -> Tuple[ChainComplex, ChainComplex]:
    """The degenerate and normalized subcomplexes in degrees 0..top.

    C^D_k has the basis vectors s_i(e); C^N_k has the basis η_k(f) for f
    outside them, whose coordinates are read off the non-degenerate rows.
    """
    _require_splittable(model)
    degenerate: Dict[int, List[int]] = {}
    normal: Dict[int, List[int]] = {}
    for k in range(top + 1):
        degenerate[k] = degenerate_indices(model, k)
        taken = set(degenerate[k])
        normal[k] = [j for j in range(model.dim(k)) if j not in taken]

    deg_diffs: Dict[int, IntMatrix] = {}
    norm_diffs: Dict[int, IntMatrix] = {}
    for k in range(1, top + 1):
        boundary = differential_matrix(model, k, ab)
        deg_diffs[k] = boundary.select_rows(degenerate[k - 1]).select_columns(degenerate[k])
        on_normal = boundary @ eta_projector(model, k).select_columns(normal[k])
        norm_diffs[k] = on_normal.select_rows(normal[k - 1])

    name = f"{model.flavor}{ab}"
    return (
        ChainComplex(f"{name}:degenerate", [len(degenerate[k]) for k in range(top + 1)], deg_diffs, model).check(),
        ChainComplex(f"{name}:normalized", [len(normal[k]) for k in range(top + 1)], norm_diffs, model).check(),
    )
