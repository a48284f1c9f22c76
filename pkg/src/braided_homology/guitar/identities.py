"""Exhaustive checks of the guitar map identities."""

from itertools import product
from typing import Iterator, Sequence, Tuple

from ..core.errors import PreconditionFailed
from ..core.report import IdentityReport
from ..structures.braided import BraidedSet
from ..structures.classify import classify
from ..structures.double import SignedElement, double, toss
from .maps import (
    apply_sigma_at,
    componentwise_action,
    entwined_sigma,
    guitar,
    guitar_inverse,
    tuple_action,
)


def tuples(n: int, max_k: int, min_k: int = 0) -> Iterator[Tuple[int, ...]]:
    for k in range(min_k, max_k + 1):
        yield from product(range(n), repeat=k)


def check_round_trip(B: BraidedSet, max_k: int = 4) -> IdentityReport:
    """J∘J⁻¹ = J⁻¹∘J = Id on all tuples of length <= max_k."""
    report = IdentityReport("guitar_round_trip")
    for xs in tuples(B.size, max_k):
        report.record(guitar_inverse(B, guitar(B, xs)) == xs, tuple=xs, direction="inv∘J")
        report.record(guitar(B, guitar_inverse(B, xs)) == xs, tuple=xs, direction="J∘inv")
    return report


def check_entwine(B: BraidedSet, max_k: int = 4) -> IdentityReport:
    """J∘σ_i = σ'_i∘J for every tuple of length <= max_k and every i.

    σ' is the mirror shelf braiding (b◁a, a) of the associated shelf.
    """
    B.require_lnd()
    report = IdentityReport("entwine")
    for xs in tuples(B.size, max_k, 2):
        jx = guitar(B, xs)
        for i in range(1, len(xs)):
            lhs = guitar(B, apply_sigma_at(B, xs, i))
            out = list(jx)
            out[i - 1], out[i] = entwined_sigma(B, jx[i - 1], jx[i])
            report.record(lhs == tuple(out), tuple=xs, i=i)
    return report


def check_guitar_cocycle(B: BraidedSet, a: Sequence[int], b: Sequence[int]) -> bool:
    """J(āb̄) = (J(ā)↷b̄)J(b̄) and J(ā^{b̄}) = J(ā)↷b̄."""
    B.require_lnd()
    a, b = tuple(a), tuple(b)
    shifted = componentwise_action(B, guitar(B, a), b)
    first = guitar(B, a + b) == shifted + guitar(B, b)
    second = guitar(B, tuple_action(B, a, b)) == shifted
    return first and second


def guitar_cocycle_report(B: BraidedSet, max_len: int = 2) -> IdentityReport:
    report = IdentityReport("guitar_cocycle")
    for a in tuples(B.size, max_len):
        for b in tuples(B.size, max_len):
            report.record(check_guitar_cocycle(B, a, b), a=a, b=b)
    return report


def barJ_identities(B: BraidedSet) -> IdentityReport:
    """Inverse-pair identities of the guitar map on the signed double.

    With ōJ = K∘J on the double: ōJ(a⁺, a⁻) = (t(a)⁺, t(a)⁻) and
    ōJ(a⁻, a⁺) = (a⁻, a⁺); moreover ā^{(b⁺,b⁻)} = ā = ā^{(b⁻,b⁺)} for all
    signed tuples ā of length <= 2.

    Raises:
        PreconditionFailed: If B is not non-degenerate, invertible and
            RI-compatible
    """
    props = classify(B)
    if not (props.nondegenerate and props.invertible and props.ri_compatible):
        raise PreconditionFailed(
            "inverse-pair identities need a non-degenerate invertible RI-compatible braiding",
            missing="ri_compatible" if props.nondegenerate and props.invertible else "invertible",
        )
    t = props.t_map
    assert t is not None
    n = B.size
    D = double(B)
    report = IdentityReport("inverse_pairs")

    def o_j(pair: Sequence[SignedElement]) -> Tuple[SignedElement, ...]:
        coded = guitar(D, [e.encode(n) for e in pair])
        return tuple(toss([SignedElement.decode(c, n) for c in coded], t))

    for a in range(n):
        plus, minus = SignedElement(a, 1), SignedElement(a, -1)
        expected = (SignedElement(t[a], 1), SignedElement(t[a], -1))
        report.record(o_j((plus, minus)) == expected, pair=f"({plus},{minus})")
        report.record(o_j((minus, plus)) == (minus, plus), pair=f"({minus},{plus})")

    for xs in tuples(2 * n, 2, 1):
        for b in range(n):
            report.record(tuple_action(D, xs, (b, n + b)) == xs, tuple=xs, word=f"{b}+{b}-")
            report.record(tuple_action(D, xs, (n + b, b)) == xs, tuple=xs, word=f"{b}-{b}+")
    return report
