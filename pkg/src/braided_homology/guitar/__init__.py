"""The guitar map and its identities."""

from .identities import (
    barJ_identities,
    check_entwine,
    check_guitar_cocycle,
    check_round_trip,
    guitar_cocycle_report,
)
from .maps import (
    act_left,
    act_right,
    apply_sigma_at,
    chi,
    chi_prime,
    componentwise_action,
    guitar,
    guitar_inverse,
    tuple_action,
)

__all__ = [
    "barJ_identities",
    "check_entwine",
    "check_guitar_cocycle",
    "check_round_trip",
    "guitar_cocycle_report",
    "act_left",
    "act_right",
    "apply_sigma_at",
    "chi",
    "chi_prime",
    "componentwise_action",
    "guitar",
    "guitar_inverse",
    "tuple_action",
]
