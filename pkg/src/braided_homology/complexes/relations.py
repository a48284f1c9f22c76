"""Exhaustive relation suites for basis chain models."""

from typing import Optional

from ..core.report import IdentityReport
from .model import CUBICAL, SEMI_STRONG, BasisChainModel

SIGNS = (1, -1)


def _top(model: BasisChainModel, max_degree: Optional[int]) -> int:
    return model.max_degree if max_degree is None else max_degree


def check_pre_cubical(model: BasisChainModel, max_degree: Optional[int] = None) -> IdentityReport:
    """d^ε_i d^ζ_j = d^ζ_{j-1} d^ε_i for i < j, on every basis element of degree <= max_degree."""
    report = IdentityReport("pre_cubical")
    d = model.boundary
    for k in range(2, _top(model, max_degree) + 1):
        for e in model.basis(k):
            for j in range(2, k + 1):
                for zeta in SIGNS:
                    dj = d(zeta, k, j, e)
                    for i in range(1, j):
                        for eps in SIGNS:
                            lhs = d(eps, k - 1, i, dj)
                            rhs = d(zeta, k - 1, j - 1, d(eps, k, i, e))
                            report.record(lhs == rhs, k=k, i=i, j=j, signs=(eps, zeta), element=e)
    return report


def check_skew_cubical(
    model: BasisChainModel,
    max_degree: Optional[int] = None,
    semi_strong: bool = True,
) -> IdentityReport:
    """Weak skew cubical relations, plus s_i s_j = s_{j+1} s_i and d⁺_i s_i = Id when semi_strong.

    Elements of degree k <= max_degree are pushed through s_j into degree k + 1.
    """
    report = IdentityReport("semi_strong_skew_cubical" if semi_strong else "weak_skew_cubical")
    d, s = model.boundary, model.s
    for k in range(1, _top(model, max_degree) + 1):
        for e in model.basis(k):
            for j in range(1, k + 1):
                sj = s(k, j, e)
                for eps in SIGNS:
                    for i in range(1, k + 2):
                        lhs = d(eps, k + 1, i, sj)
                        if i < j:
                            rhs = s(k - 1, j - 1, d(eps, k, i, e))
                            report.record(lhs == rhs, relation="d_i s_j = s_{j-1} d_i", k=k, i=i, j=j, element=e)
                        elif i > j + 1:
                            rhs = s(k - 1, j, d(eps, k, i - 1, e))
                            report.record(lhs == rhs, relation="d_i s_j = s_j d_{i-1}", k=k, i=i, j=j, element=e)
                        elif i == j:
                            other = d(eps, k + 1, j + 1, sj)
                            report.record(lhs == other, relation="d_i s_i = d_{i+1} s_i", k=k, i=i, element=e)
                            if semi_strong and eps > 0:
                                report.record(lhs == e, relation="d+_i s_i = Id", k=k, i=i, element=e)
                if semi_strong:
                    for i in range(1, j + 1):
                        lhs = s(k + 1, i, sj)
                        rhs = s(k + 1, j + 1, s(k, i, e))
                        report.record(lhs == rhs, relation="s_i s_j = s_{j+1} s_i", k=k, i=i, j=j, element=e)
    return report


def check_cubical(model: BasisChainModel, max_degree: Optional[int] = None) -> IdentityReport:
    """Classical cubical relations d^ε_i s_i = Id and d^ε_{i+1} s_i = s_i d^ε_i.

    Diagonal degeneracies usually fail the second one; the suite is kept as
    a diagnostic.
    """
    report = IdentityReport("cubical")
    d, s = model.boundary, model.s
    for k in range(1, _top(model, max_degree) + 1):
        for e in model.basis(k):
            for i in range(1, k + 1):
                si = s(k, i, e)
                for eps in SIGNS:
                    report.record(d(eps, k + 1, i, si) == e, relation="d_i s_i = Id", k=k, i=i, element=e)
                    if i <= k - 1:
                        lhs = d(eps, k + 1, i + 1, si)
                        rhs = s(k - 1, i, d(eps, k, i, e))
                        report.record(lhs == rhs, relation="d_{i+1} s_i = s_i d_i", k=k, i=i, element=e)
    return report


def check_relations(model: BasisChainModel, max_degree: Optional[int] = None) -> IdentityReport:
    """Run the suite the model declares (pre-cubical always included)."""
    report = IdentityReport(model.suite.replace(" ", "_"))
    report.absorb(check_pre_cubical(model, max_degree))
    if model.suite == SEMI_STRONG:
        report.absorb(check_skew_cubical(model, max_degree, semi_strong=True))
    elif model.suite == CUBICAL:
        report.absorb(check_cubical(model, max_degree))
    report.details["suite"] = model.suite
    report.details["max_degree"] = _top(model, max_degree)
    return report

