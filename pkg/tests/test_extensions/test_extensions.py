"""Tests for 2-cochains, abelian extensions and the group-cohomology bridge."""

from itertools import product

import pytest

from braided_homology.core.errors import (
    CycleViolation,
    NotACocycle,
    NotASection,
    NotCompatible,
    RangeError,
    SizeMismatch,
    TooLarge,
)
from braided_homology.extensions.bridge import (
    bridge_report,
    nu_relation_check,
    omega_coboundary_check,
    word_relation_report,
)
from braided_homology.extensions.cochains import (
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
from braided_homology.extensions.extension import (
    check_descriptor,
    count_extension_classes,
    extend,
    extend_braided,
    extend_unchecked,
    extensions_equivalent,
    section_cocycle,
)
from braided_homology.fixtures import braided_fixtures, small_cycle_sets
from braided_homology.homology.cohomology import cohomology_groups
from braided_homology.homology.groups import FiniteAbelianGroup
from braided_homology.structures.cycle_set import from_cycle_set, validate_cycle_set

UP_TO_TWO = small_cycle_sets(2)
UP_TO_THREE = small_cycle_sets(3)


@pytest.fixture
def bad_shift_cochain(z2):
    """Not a 2-cocycle on the shift cycle set of size 2."""
    return Cochain2.from_ranks(2, z2, [[1, 0], [0, 0]])


@pytest.mark.unit
class TestCochains:
    """Test cochain tables and the cocycle conditions."""

    def test_to_dict(self, z2):
        f = Cochain2.from_ranks(2, z2, [[1, 0], [0, 1]])
        assert f.to_dict() == {"kind": "cochain2", "base": 2, "moduli": [2], "values": [[1, 0], [0, 1]]}

    def test_from_ranks_shape(self, z2):
        with pytest.raises(SizeMismatch):
            Cochain2.from_ranks(2, z2, [[0, 0]])
        with pytest.raises(RangeError):
            Cochain2.from_ranks(1, z2, [[2]])

    def test_validate_cochain(self, z2):
        assert validate_cochain(1, z2, [[[1]]])(0, 0) == (1,)
        with pytest.raises(RangeError):
            validate_cochain(1, z2, [[[3]]])
        with pytest.raises(SizeMismatch):
            validate_cochain(1, z2, [[[0, 0]]])

    def test_arithmetic(self, z2):
        f = Cochain2.from_ranks(2, z2, [[1, 0], [1, 1]])
        assert (f + f) == Cochain2.zero(2, z2)
        assert (f - Cochain2.zero(2, z2)) == f

    def test_all_cochains(self, z2):
        assert sum(1 for _ in all_cochains(2, z2)) == 16

    @pytest.mark.parametrize("name", sorted(UP_TO_THREE))
    def test_delta_cochains_are_cocycles(self, name, z2):
        C = UP_TO_THREE[name]
        for a0, a1 in product(z2.elements(), repeat=2):
            assert is_2cocycle(C, delta_cochain(C, z2, a0, a1))

    @pytest.mark.parametrize("name", sorted(UP_TO_THREE))
    def test_coboundaries_are_cocycles(self, name):
        C = UP_TO_THREE[name]
        group = FiniteAbelianGroup.cyclic(3)
        gamma = [(x * x + 1,) for x in range(C.size)]
        assert is_2cocycle(C, coboundary(C, group, gamma))

    def test_shift_non_cocycle(self, shift2, bad_shift_cochain):
        assert not is_2cocycle(shift2, bad_shift_cochain)

    def test_size_mismatch(self, trivial3, bad_shift_cochain):
        with pytest.raises(SizeMismatch):
            is_2cocycle(trivial3, bad_shift_cochain)

    @pytest.mark.parametrize("name", ["r3", "z2", "flip2", "trivial_shelf2"])
    def test_zero_satisfies_everything(self, name, z2):
        B = braided_fixtures(3)[name]
        zero = Cochain2.zero(B.size, z2)
        assert is_lnd_2cocycle(B, zero)
        assert is_star_2cocycle(B, zero)
        assert compatible_pair(B, zero, zero)

    @pytest.mark.parametrize("name", sorted(UP_TO_TWO))
    def test_cycle_set_conditions_coincide(self, name, z2):
        C = UP_TO_TWO[name]
        B = from_cycle_set(C)
        for f in all_cochains(C.size, z2):
            plain = is_2cocycle(C, f)
            assert is_lnd_2cocycle(B, f) == plain
            assert is_star_2cocycle(B, f) == plain
            assert compatible_pair(B, f, f) == plain


@pytest.mark.unit
class TestExtensions:
    """Test A x_f X, its sections and equivalence."""

    @pytest.mark.parametrize("name", sorted(UP_TO_TWO))
    def test_extend_validates_exactly_for_cocycles(self, name, z2):
        C = UP_TO_TWO[name]
        for f in all_cochains(C.size, z2):
            if is_2cocycle(C, f):
                E = extend(C, z2, f)
                assert E.total.size == 2 * C.size
            else:
                with pytest.raises(NotACocycle):
                    extend(C, z2, f)
                with pytest.raises(CycleViolation):
                    validate_cycle_set(extend_unchecked(C, z2, f))

    def test_descriptor_laws(self, square_free3, z2):
        f = delta_cochain(square_free3, z2, (0,), (1,))
        E = extend(square_free3, z2, f)
        report = check_descriptor(E)
        assert report.passed, report.first_failure()
        assert E.to_dict()["total"]["size"] == 6

    def test_canonical_section_recovers_cocycle(self, shift2, z2):
        f = delta_cochain(shift2, z2, (1,), (0,))
        E = extend(shift2, z2, f)
        assert section_cocycle(E, E.canonical_section()) == f

    def test_other_section_is_cohomologous(self, square_free3, z2):
        f = delta_cochain(square_free3, z2, (0,), (1,))
        E = extend(square_free3, z2, f)
        section = [E.encode((1,) if x == 1 else (0,), x) for x in range(3)]
        g = section_cocycle(E, section)
        assert is_2cocycle(square_free3, g)
        assert extensions_equivalent(square_free3, z2, f, g)

    def test_not_a_section(self, shift2, z2):
        E = extend(shift2, z2, Cochain2.zero(2, z2))
        with pytest.raises(NotASection):
            section_cocycle(E, [1, 0])

    def test_encoding(self, shift2, z2):
        E = extend(shift2, z2, Cochain2.zero(2, z2))
        assert E.encode((1,), 0) == 2
        assert E.decode(3) == ((1,), 1)
        assert E.act((1,), 3) == 1
        assert E.projection == (0, 1, 0, 1)

    @pytest.mark.parametrize("search_limit", [None, 0])
    def test_coboundary_shift_is_equivalent(self, square_free3, z2, search_limit):
        f = delta_cochain(square_free3, z2, (1,), (0,))
        g = f + coboundary(square_free3, z2, [(1,), (0,), (1,)])
        assert extensions_equivalent(square_free3, z2, f, g, search_limit=search_limit)

    @pytest.mark.parametrize("search_limit", [None, 0])
    def test_trivial_base_has_no_coboundaries(self, trivial2, z2, search_limit):
        f = Cochain2.zero(2, z2)
        g = delta_cochain(trivial2, z2, (0,), (1,))
        assert not extensions_equivalent(trivial2, z2, f, g, search_limit=search_limit)

    @pytest.mark.parametrize("name", sorted(UP_TO_THREE))
    def test_class_count_matches_cohomology(self, name, z2):
        C = UP_TO_THREE[name]
        assert count_extension_classes(C, z2) == cohomology_groups(C, 2, z2).order

    def test_trivial_class_count(self, trivial2, z2):
        assert count_extension_classes(trivial2, z2) == 16

    def test_class_count_budget(self, trivial2, z2):
        with pytest.raises(TooLarge):
            count_extension_classes(trivial2, z2, budget=8)


@pytest.mark.unit
class TestBraidedExtensions:
    """Test extensions of LND braided sets."""

    @pytest.mark.parametrize("name", sorted(UP_TO_TWO))
    def test_cycle_set_braiding_matches_extension(self, name, z2):
        C = UP_TO_TWO[name]
        B = from_cycle_set(C)
        for f in all_cochains(C.size, z2):
            if not is_2cocycle(C, f):
                continue
            total = extend(C, z2, f).total
            E = extend_braided(B, z2, f, f)
            for p, q in product(range(E.size), repeat=2):
                assert E.dot(p, q) == total.dot[p][q]

    def test_incompatible_pair(self, shift2, z2, bad_shift_cochain):
        with pytest.raises(NotCompatible) as exc:
            extend_braided(from_cycle_set(shift2), z2, bad_shift_cochain, bad_shift_cochain)
        assert exc.value.witness["condition"] == "lnd_cocycle"

    def test_zero_cocycles_extend_quandle(self, r3, z2):
        zero = Cochain2.zero(3, z2)
        E = extend_braided(r3, z2, zero, zero)
        assert E.size == 6
        assert E.is_left_nondegenerate


@pytest.mark.unit
class TestBridge:
    """Test the function module and the star-cocycle bridge."""

    @pytest.mark.parametrize("name", ["flip2", "z2", "trivial_shelf2", "cs2_0", "cs2_1"])
    def test_bridge_small(self, name, z2):
        report = bridge_report(braided_fixtures(3)[name], z2)
        assert report.passed, report.first_failure()

    def test_bridge_quandle(self, r3, z2):
        report = bridge_report(r3, z2)
        assert report.passed, report.first_failure()
        assert report.details["group"] == "Z/2"

    @pytest.mark.parametrize("name", sorted(braided_fixtures(3)))
    def test_word_relations(self, name):
        assert word_relation_report(braided_fixtures(3)[name]).passed

    def test_nu_on_zero(self, r3, z2):
        assert nu_relation_check(r3, Cochain2.zero(3, z2))

    def test_omega_for_mixed_function(self, r3):
        group = FiniteAbelianGroup.cyclic(3)
        assert omega_coboundary_check(r3, group, [(0,), (1,), (2,)])
