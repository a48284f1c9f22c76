"""2-cocycles, abelian extensions and the group-cohomology bridge."""

from .bridge import (
    bridge_report,
    fun_module_action,
    nu_relation_check,
    omega_coboundary_check,
    word_relation_report,
)
from .cochains import (
    Cochain2,
    all_cochains,
    coboundary,
    compatible_pair,
    delta_cochain,
    is_2cocycle,
    is_lnd_2cocycle,
    is_star_2cocycle,
    validate_cochain,
)
from .extension import (
    ExtensionDescriptor,
    check_descriptor,
    count_extension_classes,
    extend,
    extend_braided,
    extend_unchecked,
    extensions_equivalent,
    section_cocycle,
)

__all__ = [
    "bridge_report",
    "fun_module_action",
    "nu_relation_check",
    "omega_coboundary_check",
    "word_relation_report",
    "Cochain2",
    "all_cochains",
    "coboundary",
    "compatible_pair",
    "delta_cochain",
    "is_2cocycle",
    "is_lnd_2cocycle",
    "is_star_2cocycle",
    "validate_cochain",
    "ExtensionDescriptor",
    "check_descriptor",
    "count_extension_classes",
    "extend",
    "extend_braided",
    "extend_unchecked",
    "extensions_equivalent",
    "section_cocycle",
]
