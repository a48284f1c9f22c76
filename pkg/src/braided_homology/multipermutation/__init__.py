"""Retraction, multipermutation level, doubling and cycle-set enumeration."""

from .canonical import are_isomorphic, automorphism_count, canonical_form, canonical_table
from .enumerate import EnumerationConfig, count_cycle_sets, enumerate_cycle_sets, row0_candidates
from .nm import NmTable, nm_table
from .retraction import (
    MpReport,
    check_doubling,
    doubling_cocycle,
    doubling_extension,
    doubling_tower,
    is_nondegenerate,
    is_square_free,
    mp_level,
    retract,
    retraction_map,
)

__all__ = [
    "are_isomorphic",
    "automorphism_count",
    "canonical_form",
    "canonical_table",
    "EnumerationConfig",
    "count_cycle_sets",
    "enumerate_cycle_sets",
    "row0_candidates",
    "NmTable",
    "nm_table",
    "MpReport",
    "check_doubling",
    "doubling_cocycle",
    "doubling_extension",
    "doubling_tower",
    "is_nondegenerate",
    "is_square_free",
    "mp_level",
    "retract",
    "retraction_map",
]
