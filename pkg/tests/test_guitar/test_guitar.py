"""Tests for the guitar map and its identities."""

import pytest

from braided_homology.core.errors import IndexOutOfRange, PreconditionFailed
from braided_homology.fixtures import braided_fixtures
from braided_homology.guitar.identities import (
    barJ_identities,
    check_entwine,
    check_guitar_cocycle,
    check_round_trip,
    guitar_cocycle_report,
    tuples,
)
from braided_homology.guitar.maps import (
    act_left,
    act_right,
    apply_sigma_at,
    chi,
    chi_prime,
    guitar,
    guitar_inverse,
    tuple_action,
)
from braided_homology.structures.classify import classify
from braided_homology.structures.cycle_set import from_cycle_set

FIXTURES = sorted(braided_fixtures(3))


@pytest.mark.unit
class TestGuitarMap:
    """Test J, its inverse and the tuple actions."""

    def test_flip_is_identity(self, flip2):
        for xs in tuples(2, 3):
            assert guitar(flip2, xs) == xs

    def test_quandle_values(self, r3):
        # J(x1, x2) = (x1^x2, x2) with x1^x2 = 2·x2 - x1
        assert guitar(r3, (0, 1)) == (2, 1)
        assert guitar_inverse(r3, (2, 1)) == (0, 1)

    def test_empty_and_single(self, r3):
        assert guitar(r3, ()) == ()
        assert guitar(r3, (2,)) == (2,)

    def test_right_and_left_words(self, r3):
        assert act_right(r3, 0, (1, 2)) == r3.right[r3.right[0][1]][2]
        assert act_left(r3, (1, 2), 0) == r3.left[1][r3.left[2][0]]

    def test_tuple_action_of_flip(self, flip2):
        assert tuple_action(flip2, (0, 1, 1), (1, 0)) == (0, 1, 1)

    def test_apply_sigma_at(self, flip2):
        assert apply_sigma_at(flip2, (0, 1, 1), 1) == (1, 0, 1)

    def test_chi_position_checked(self, r3):
        with pytest.raises(IndexOutOfRange):
            chi(r3, 0, (0, 1))
        with pytest.raises(IndexOutOfRange):
            chi_prime(r3, 3, (0, 1))

    def test_chi_prime_first_position(self, r3):
        ys = (1, 2)
        assert chi_prime(r3, 1, ys) == guitar_inverse(r3, ys)[0]


@pytest.mark.unit
class TestGuitarIdentities:
    """Test the exhaustive identity checks on the fixture library."""

    @pytest.mark.parametrize("name", FIXTURES)
    def test_round_trip(self, name):
        report = check_round_trip(braided_fixtures(3)[name], 3)
        assert report.passed, report.first_failure()

    @pytest.mark.parametrize("name", FIXTURES)
    def test_entwine(self, name):
        report = check_entwine(braided_fixtures(3)[name], 3)
        assert report.passed, report.first_failure()

    @pytest.mark.parametrize("name", FIXTURES)
    def test_cocycle(self, name):
        report = guitar_cocycle_report(braided_fixtures(3)[name], 2)
        assert report.passed, report.first_failure()

    def test_single_cocycle_instance(self, r3):
        assert check_guitar_cocycle(r3, (0, 2), (1,))

    @pytest.mark.parametrize("name", FIXTURES)
    def test_inverse_pairs(self, name):
        B = braided_fixtures(3)[name]
        props = classify(B)
        if not (props.nondegenerate and props.invertible and props.ri_compatible):
            with pytest.raises(PreconditionFailed):
                barJ_identities(B)
        else:
            report = barJ_identities(B)
            assert report.passed, report.first_failure()

    @pytest.mark.slow
    @pytest.mark.parametrize("index", range(23))
    def test_size_four_inverse_pairs(self, size_four_cycle_sets, index):
        report = barJ_identities(from_cycle_set(size_four_cycle_sets[index]))
        assert report.passed, report.first_failure()

    def test_inverse_pairs_need_invertible(self, group_z2):
        with pytest.raises(PreconditionFailed):
            barJ_identities(group_z2)

    @pytest.mark.slow
    def test_round_trip_degree_four(self, r3):
        assert check_round_trip(r3, 4).passed
        assert check_entwine(r3, 4).passed
