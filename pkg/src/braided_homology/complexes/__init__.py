"""Pre-cubical chain models, differentials and the degenerate splitting."""

from .chain import (
    DEFAULT_AB,
    TESTED_ALPHA_BETAS,
    AlphaBeta,
    ChainComplex,
    chain_complex,
    cycle_set_complex,
    differential_matrix,
    lnd_complex,
)
from .conjugation import ConjugationCertificate, conjugate_by_guitar, extended_guitar
from .model import (
    CUBICAL,
    PRE_CUBICAL,
    SEMI_STRONG,
    SIGN_CHOICES,
    BasisChainModel,
    BirackFamily,
    BraidedFamily,
    StarFamily,
    birack_family,
    birack_star_family,
    braided_family,
    degeneracies_coeff,
    degeneracies_plain,
)
from .relations import check_cubical, check_pre_cubical, check_relations, check_skew_cubical
from .splitting import (
    SplitCertificate,
    degenerate_indices,
    eta_projector,
    split,
    split_complexes,
)

__all__ = [
    "DEFAULT_AB",
    "TESTED_ALPHA_BETAS",
    "AlphaBeta",
    "ChainComplex",
    "chain_complex",
    "cycle_set_complex",
    "differential_matrix",
    "lnd_complex",
    "ConjugationCertificate",
    "conjugate_by_guitar",
    "extended_guitar",
    "CUBICAL",
    "PRE_CUBICAL",
    "SEMI_STRONG",
    "SIGN_CHOICES",
    "BasisChainModel",
    "BirackFamily",
    "BraidedFamily",
    "StarFamily",
    "birack_family",
    "birack_star_family",
    "braided_family",
    "degeneracies_coeff",
    "degeneracies_plain",
    "check_cubical",
    "check_pre_cubical",
    "check_relations",
    "check_skew_cubical",
    "SplitCertificate",
    "degenerate_indices",
    "eta_projector",
    "split",
    "split_complexes",
]
