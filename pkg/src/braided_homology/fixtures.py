"""Built-in fixture library.

Every cycle set of size <= 3 up to isomorphism, the dihedral quandle R_3 and
a trivial shelf with their shelf braidings, the group Z/2 and the flip.
"""

from functools import lru_cache
from typing import Dict, List, Union

from .core.errors import InputError
from .multipermutation.enumerate import EnumerationConfig, enumerate_cycle_sets
from .structures.braided import BraidedSet
from .structures.cycle_set import CycleSet, from_cycle_set, trivial_cycle_set, validate_cycle_set
from .structures.monoid import cyclic_group
from .structures.shelf import MIRROR, PRIMAL, dihedral_quandle, from_shelf, trivial_shelf

Fixture = Union[BraidedSet, CycleSet]


@lru_cache(maxsize=None)
def small_cycle_sets(max_size: int = 3) -> Dict[str, CycleSet]:
    """cs<n>_<i> for every cycle set of size n <= max_size, in canonical order."""
    found: Dict[str, CycleSet] = {}
    for n in range(1, max_size + 1):
        for i, C in enumerate(enumerate_cycle_sets(EnumerationConfig(n, up_to_iso=True))):
            found[f"cs{n}_{i}"] = C
    return found


def shift_cycle_set(n: int = 2) -> CycleSet:
    """x·y = y + 1 mod n."""
    return validate_cycle_set([[(y + 1) % n for y in range(n)] for _ in range(n)])


@lru_cache(maxsize=None)
def braided_fixtures(max_size: int = 3) -> Dict[str, BraidedSet]:
    """Named braided sets of size <= max_size."""
    fixtures: Dict[str, BraidedSet] = {
        name: from_cycle_set(C) for name, C in small_cycle_sets(max_size).items()
    }
    if max_size >= 2:
        fixtures["flip2"] = from_cycle_set(trivial_cycle_set(2))
        fixtures["z2"] = cyclic_group(2)
        fixtures["trivial_shelf2"] = from_shelf(trivial_shelf(2), PRIMAL)
    if max_size >= 3:
        fixtures["r3"] = from_shelf(dihedral_quandle(3), PRIMAL)
        fixtures["r3_mirror"] = from_shelf(dihedral_quandle(3), MIRROR)
    return fixtures


def fixture_names(max_size: int = 3) -> List[str]:
    return sorted(braided_fixtures(max_size))


def fixture(name: str) -> Fixture:
    """Look up a fixture by name; cycle-set names return the cycle set itself.

    Raises:
        InputError: For an unknown name
    """
    cycle_sets = small_cycle_sets(3)
    if name in cycle_sets:
        return cycle_sets[name]
    braided = braided_fixtures(3)
    if name in braided:
        return braided[name]
    raise InputError(f"unknown fixture {name!r}", witness={"known": fixture_names(3)})
