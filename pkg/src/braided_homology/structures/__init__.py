"""Braided sets, cycle sets, shelves and braided modules."""

from .braided import (
    BraidedSet,
    inverse_braiding,
    sideways,
    validate_braided_set,
)
from .classify import (
    PropertyReport,
    associated_shelf,
    associated_shelf_report,
    check_sideways_identities,
    classify,
)
from .cycle_set import (
    CycleSet,
    from_cycle_set,
    permutation_cycle_set,
    trivial_cycle_set,
    validate_cycle_set,
)
from .double import SignedElement, double, double_t_map, toss
from .modules import (
    LeftBraidedModule,
    RightBraidedModule,
    adjoint_left_module,
    adjoint_right_module,
    sideways_left_module,
    structure_relations,
    trivial_left_module,
    trivial_right_module,
    validate_left_module,
    validate_right_module,
)
from .monoid import cyclic_group, from_group
from .shelf import MIRROR, PRIMAL, Shelf, dihedral_quandle, from_shelf, trivial_shelf, validate_shelf

__all__ = [
    "BraidedSet",
    "inverse_braiding",
    "sideways",
    "validate_braided_set",
    "PropertyReport",
    "associated_shelf",
    "associated_shelf_report",
    "check_sideways_identities",
    "classify",
    "CycleSet",
    "from_cycle_set",
    "permutation_cycle_set",
    "trivial_cycle_set",
    "validate_cycle_set",
    "SignedElement",
    "double",
    "double_t_map",
    "toss",
    "LeftBraidedModule",
    "RightBraidedModule",
    "adjoint_left_module",
    "adjoint_right_module",
    "sideways_left_module",
    "structure_relations",
    "trivial_left_module",
    "trivial_right_module",
    "validate_left_module",
    "validate_right_module",
    "cyclic_group",
    "from_group",
    "MIRROR",
    "PRIMAL",
    "Shelf",
    "dihedral_quandle",
    "from_shelf",
    "trivial_shelf",
    "validate_shelf",
]
