"""Tests for braided sets, cycle sets, shelves, monoids, modules and the double."""

from itertools import product

import pytest

from braided_homology.core.errors import (
    CycleViolation,
    InputError,
    ModuleViolation,
    NotAssociative,
    NotLeftNondegenerate,
    NotUnit,
    PreconditionFailed,
    RangeError,
    RowNotPermutation,
    SelfDistributivityViolation,
    SizeMismatch,
    YbeViolation,
)
from braided_homology.fixtures import braided_fixtures
from braided_homology.structures.braided import (
    inverse_braiding,
    sideways,
    validate_braided_set,
)
from braided_homology.structures.classify import (
    associated_shelf,
    associated_shelf_report,
    check_sideways_identities,
    classify,
)
from braided_homology.structures.cycle_set import (
    from_cycle_set,
    permutation_cycle_set,
    trivial_cycle_set,
    validate_cycle_set,
)
from braided_homology.structures.double import SignedElement, double, double_t_map, toss
from braided_homology.structures.modules import (
    adjoint_left_module,
    adjoint_right_module,
    sideways_left_module,
    structure_relations,
    trivial_right_module,
    validate_left_module,
    validate_right_module,
)
from braided_homology.structures.monoid import cyclic_group, from_group
from braided_homology.structures.shelf import MIRROR, PRIMAL, dihedral_quandle, from_shelf, validate_shelf


@pytest.mark.unit
class TestBraidedSet:
    """Test validation and derived operations of braided sets."""

    def test_flip_is_valid(self, flip2):
        assert flip2.sigma(0, 1) == (1, 0)
        assert flip2.is_left_nondegenerate
        assert flip2.is_invertible

    def test_ybe_violation_has_witness(self):
        # sigma(a, b) = (1 - a, b)
        left = [[1, 1], [0, 0]]
        right = [[0, 1], [0, 1]]
        with pytest.raises(YbeViolation) as exc:
            validate_braided_set(left, right)
        assert len(exc.value.witness) == 3

    def test_shape_errors(self):
        with pytest.raises(SizeMismatch):
            validate_braided_set([], [])
        with pytest.raises(SizeMismatch):
            validate_braided_set([[0]], [[0], [0]])
        with pytest.raises(RangeError):
            validate_braided_set([[1]], [[0]])

    @pytest.mark.parametrize("name", sorted(braided_fixtures(3)))
    def test_sideways_consistency(self, name):
        B = braided_fixtures(3)[name]
        for a, b in product(range(B.size), repeat=2):
            dot, hook = sideways(B, a, b)
            assert B.sigma(hook, b) == (dot, a)

    def test_sideways_requires_lnd(self):
        # sigma(a, b) = (b, b)
        B = validate_braided_set([[0, 1], [0, 1]], [[0, 1], [0, 1]])
        assert not B.is_left_nondegenerate
        with pytest.raises(NotLeftNondegenerate):
            sideways(B, 0, 1)

    def test_inverse_braiding(self, r3):
        inverse = inverse_braiding(r3)
        for a, b in product(range(3), repeat=2):
            assert inverse[r3.sigma(a, b)] == (a, b)

    @pytest.mark.parametrize("name", sorted(braided_fixtures(3)))
    def test_sideways_identities(self, name):
        B = braided_fixtures(3)[name]
        report = check_sideways_identities(B)
        assert report.passed
        assert report.checked == 3 * B.size**3

    def test_to_dict(self, flip2):
        expected = {"kind": "braided_set", "size": 2, "left": [[0, 1], [0, 1]], "right": [[0, 0], [1, 1]]}
        assert flip2.to_dict() == expected


@pytest.mark.unit
class TestCycleSet:
    """Test cycle-set validation and the associated braiding."""

    def test_trivial(self, trivial3):
        assert trivial3.dot == ((0, 1, 2),) * 3
        assert trivial3.squaring == (0, 1, 2)

    def test_star_inverts_rows(self, square_free3):
        for a, b in product(range(3), repeat=2):
            assert square_free3.dot[a][square_free3.star[a][b]] == b

    def test_row_not_permutation(self):
        with pytest.raises(RowNotPermutation) as exc:
            validate_cycle_set([[0, 0], [0, 1]])
        assert exc.value.witness == {"row": 0}

    def test_cycle_violation(self):
        # row 0 is the identity, row 1 swaps: (0·1)·(0·z) = 1·z but (1·0)·(1·z) = z
        with pytest.raises(CycleViolation):
            validate_cycle_set([[0, 1], [1, 0]])

    def test_permutation_cycle_set(self):
        C = permutation_cycle_set([1, 2, 0])
        assert C.dot[2] == (1, 2, 0)

    def test_associated_braiding(self, shift2):
        B = from_cycle_set(shift2)
        props = classify(B)
        assert props.involutive
        assert props.left_nondegenerate and props.right_nondegenerate
        for a, b in product(range(2), repeat=2):
            assert B.dot(a, b) == shift2.dot[a][b]
            assert B.hook(a, b) == shift2.dot[a][b]

    def test_trivial_cycle_set_gives_flip(self, trivial2):
        B = from_cycle_set(trivial2)
        for a, b in product(range(2), repeat=2):
            assert B.sigma(a, b) == (b, a)


@pytest.mark.unit
class TestShelves:
    """Test shelves and their braidings."""

    def test_dihedral_quandle(self):
        S = dihedral_quandle(3)
        assert S.is_rack and S.is_spindle
        assert not S.is_trivial

    def test_self_distributivity_violation(self):
        with pytest.raises(SelfDistributivityViolation):
            validate_shelf([[1, 0], [1, 0]])

    def test_primal_braiding_is_lnd(self, r3):
        props = classify(r3)
        assert props.left_nondegenerate
        assert props.invertible
        assert not props.involutive
        assert props.ri_compatible

    def test_unknown_variant(self):
        with pytest.raises(InputError) as exc_info:
            from_shelf(dihedral_quandle(3), "sideways")
        assert exc_info.value.exit_code == 2

    @pytest.mark.parametrize("variant", [PRIMAL, MIRROR])
    def test_nondegeneracy_tracks_rack_property(self, variant):
        constant = validate_shelf([[0, 0], [0, 0]])
        assert not constant.is_rack
        B = from_shelf(constant, variant)
        if variant == PRIMAL:
            assert B.is_right_nondegenerate and not B.is_left_nondegenerate
        else:
            assert B.is_left_nondegenerate and not B.is_right_nondegenerate
        rack = from_shelf(dihedral_quandle(3), variant)
        assert rack.is_left_nondegenerate and rack.is_right_nondegenerate

    def test_inverse_translations_need_a_rack(self):
        with pytest.raises(PreconditionFailed) as exc_info:
            validate_shelf([[0, 0], [0, 0]]).inverse_op()
        assert exc_info.value.missing == "rack"

    def test_associated_shelf_of_shelf_braiding(self, r3):
        assert associated_shelf(r3).op == dihedral_quandle(3).op

    @pytest.mark.parametrize("name", ["r3", "trivial_shelf2", "flip2", "cs3_1", "z2"])
    def test_associated_shelf_report(self, name):
        assert associated_shelf_report(braided_fixtures(3)[name]).passed


@pytest.mark.unit
class TestMonoid:
    """Test monoid braidings."""

    def test_cyclic_group(self, group_z2):
        props = classify(group_z2)
        assert props.left_nondegenerate
        assert not props.invertible
        assert group_z2.sigma(1, 1) == (0, 0)

    def test_idempotent(self, group_z2):
        for a, b in product(range(2), repeat=2):
            once = group_z2.sigma(a, b)
            assert group_z2.sigma(*once) == once

    def test_monoid_braiding_is_idempotent_but_not_lnd(self):
        B = from_group([[0, 1], [1, 1]], 0)
        assert not B.is_left_nondegenerate
        for a, b in product(range(2), repeat=2):
            assert B.sigma(*B.sigma(a, b)) == B.sigma(a, b)

    def test_not_unit(self):
        with pytest.raises(NotUnit):
            from_group([[0, 1], [1, 0]], 1)

    def test_not_associative(self):
        with pytest.raises(NotAssociative):
            from_group([[0, 1, 2], [1, 0, 0], [2, 0, 0]], 0)


@pytest.mark.unit
class TestModules:
    """Test braided modules."""

    def test_adjoint_modules(self, r3):
        assert adjoint_right_module(r3).carrier_size == 3
        assert adjoint_left_module(r3).carrier_size == 3

    def test_trivial_right_module_is_solid(self, r3):
        assert trivial_right_module(r3).solid

    def test_right_module_violation(self, shift2):
        B = from_cycle_set(shift2)
        with pytest.raises(ModuleViolation):
            validate_right_module(B, [[0, 0], [1, 0]])

    def test_left_module_shape(self, flip2):
        with pytest.raises(SizeMismatch):
            validate_left_module(flip2, [[0]])

    @pytest.mark.parametrize("star", [False, True])
    def test_sideways_modules(self, r3, star):
        N = sideways_left_module(r3, star=star)
        for a, q in product(range(3), repeat=2):
            expected = r3.hook(a, q) if star else r3.dot(a, q)
            assert N.act(a, q) == expected

    def test_structure_relations_skip_fixed_pairs(self, flip2):
        assert structure_relations(flip2) == [((0, 1), (1, 0)), ((1, 0), (0, 1))]


@pytest.mark.unit
class TestDouble:
    """Test the signed double and the toss map."""

    def test_double_is_braided(self, r3):
        D = double(r3)
        assert D.size == 6
        validate_braided_set(D.left, D.right)

    def test_double_of_involutive(self, flip2):
        D = double(flip2)
        validate_braided_set(D.left, D.right)
        assert double_t_map(flip2) == (0, 1, 2, 3)

    def test_double_needs_invertible(self, group_z2):
        with pytest.raises(PreconditionFailed) as exc:
            double(group_z2)
        assert exc.value.missing in ("right_nondegenerate", "invertible")

    def test_signed_encoding(self):
        assert SignedElement(2, -1).encode(3) == 5
        assert SignedElement.decode(4, 3) == SignedElement(1, -1)
        with pytest.raises(RangeError):
            SignedElement(0, 0)

    def test_toss(self):
        elements = [SignedElement(0, 1), SignedElement(0, -1)]
        assert toss(elements, [1, 0]) == [SignedElement(0, 1), SignedElement(1, -1)]
        with pytest.raises(PreconditionFailed):
            toss(elements, [0, 0])
