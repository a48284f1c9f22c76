"""Guitar conjugation between the braided and birack families."""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from ..core.report import IdentityReport
from ..guitar.maps import guitar
from ..structures.braided import BraidedSet
from ..structures.modules import LeftBraidedModule, RightBraidedModule
from ..utils.config import setting
from .model import Elem, birack_family, braided_family


@dataclass
class ConjugationCertificate(IdentityReport):
    """J∘d^{r,-}_i = d_i∘J and J∘d^{l,+}_i = d'_i∘J up to max_degree."""

    max_degree: int = 0

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        result["max_degree"] = self.max_degree
        return result


def extended_guitar(B: BraidedSet, e: Elem) -> Elem:
    """Id_M x J x Id_N."""
    return (e[0],) + guitar(B, e[1:-1]) + (e[-1],)


def conjugate_by_guitar(
    B: BraidedSet,
    M: Optional[RightBraidedModule] = None,
    N: Optional[LeftBraidedModule] = None,
    max_degree: Optional[int] = None,
) -> ConjugationCertificate:
    """Check the guitar map intertwines the two pre-cubical structures.

    Never raises on a failed identity; the first witnesses are kept.

    Raises:
        NotLeftNondegenerate: If B is not LND
    """
    top = setting(max_degree, "complexes.max_degree")
    braided = braided_family(B, M, N, max_degree=top)
    birack = birack_family(B, M, N, max_degree=top)
    cert = ConjugationCertificate("guitar_conjugation", max_degree=top)
    for k in range(1, top + 1):
        for e in braided.basis(k):
            je = extended_guitar(B, e)
            for i in range(1, k + 1):
                cert.record(
                    extended_guitar(B, braided.d_minus(k, i, e)) == birack.d_minus(k, i, je),
                    relation="J d^(r,-) = d J",
                    k=k,
                    i=i,
                    element=e,
                )
                cert.record(
                    extended_guitar(B, braided.d_plus(k, i, e)) == birack.d_plus(k, i, je),
                    relation="J d^(l,+) = d' J",
                    k=k,
                    i=i,
                    element=e,
                )
    return cert
