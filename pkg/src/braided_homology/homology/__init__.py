"""Exact integer homology and cohomology."""

from .cohomology import CohomologyResult, cohomology_groups, first_cohomology_by_orbits, orbit_count_report
from .groups import (
    BettiBound,
    FiniteAbelianGroup,
    HomologyResult,
    additivity_report,
    betti_bound_check,
    betti_table,
    elementary_divisors,
    homology_at,
    homology_table,
    invariants_from_divisors,
    orbits,
)
from .smith import SmithForm, check_smith, invariant_factors, matrix_rank, smith_normal_form, solve_mod

__all__ = [
    "CohomologyResult",
    "cohomology_groups",
    "first_cohomology_by_orbits",
    "orbit_count_report",
    "BettiBound",
    "FiniteAbelianGroup",
    "HomologyResult",
    "additivity_report",
    "betti_bound_check",
    "betti_table",
    "elementary_divisors",
    "homology_at",
    "homology_table",
    "invariants_from_divisors",
    "orbits",
    "SmithForm",
    "check_smith",
    "invariant_factors",
    "matrix_rank",
    "smith_normal_form",
    "solve_mod",
]
