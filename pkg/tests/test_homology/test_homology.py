"""Tests for Smith forms, homology tables, orbits and cohomology."""

import pytest
from sympy import ZZ, Matrix
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from braided_homology.complexes.chain import cycle_set_complex, lnd_complex
from braided_homology.core.errors import RangeError, UnsupportedDegree
from braided_homology.core.matrix import IntMatrix
from braided_homology.fixtures import small_cycle_sets
from braided_homology.homology.cohomology import cohomology_groups, first_cohomology_by_orbits, orbit_count_report
from braided_homology.homology.groups import (
    FiniteAbelianGroup,
    HomologyResult,
    betti_bound_check,
    betti_table,
    elementary_divisors,
    homology_at,
    homology_table,
    invariants_from_divisors,
    orbits,
)
from braided_homology.homology.smith import check_smith, invariant_factors, matrix_rank, smith_normal_form, solve_mod
from braided_homology.structures.cycle_set import trivial_cycle_set

SAMPLE = IntMatrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
CYCLE_SETS = small_cycle_sets(3)


@pytest.mark.unit
class TestSmithForm:
    """Test the integer Smith normal form."""

    def test_invariants(self):
        assert invariant_factors(SAMPLE) == [2, 6, 12]

    def test_invariants_match_sympy(self):
        oracle = sympy_invariant_factors(Matrix(SAMPLE.to_lists()), domain=ZZ)
        assert [abs(int(d)) for d in oracle if d != 0] == invariant_factors(SAMPLE)

    def test_transforms_certified(self):
        form = smith_normal_form(SAMPLE, inverse=True)
        report = check_smith(SAMPLE, form)
        assert report.passed, report.first_failure()

    def test_without_transforms(self):
        form = smith_normal_form(SAMPLE, transforms=False)
        assert form.U is None
        assert not check_smith(SAMPLE, form).passed

    def test_rank_matches_sympy(self, r3):
        complex_ = lnd_complex(r3, 2)
        for k in (2, 3):
            matrix = complex_.differential(k)
            assert matrix_rank(matrix) == Matrix(matrix.to_lists()).rank()

    def test_rank_of_zero(self):
        assert matrix_rank(IntMatrix.zeros(3, 2)) == 0

    def test_solve_mod(self):
        M = IntMatrix([[2]])
        assert solve_mod(M, [1], 4) is None
        (x,) = solve_mod(M, [2], 4)
        assert (2 * x - 2) % 4 == 0

    def test_solve_mod_system(self):
        M = IntMatrix([[1, 1], [0, 2]])
        x = solve_mod(M, [1, 1], 3)
        assert x is not None
        assert M.apply(x)[0] % 3 == 1 and M.apply(x)[1] % 3 == 1

    def test_solve_mod_rejects_modulus(self):
        with pytest.raises(RangeError):
            solve_mod(IntMatrix([[1]]), [0], 0)


@pytest.mark.unit
class TestGroups:
    """Test finite abelian coefficient groups and divisor bookkeeping."""

    def test_rank_unrank(self):
        G = FiniteAbelianGroup((2, 3))
        assert G.order == 6
        assert G.unrank(5) == (1, 2)
        assert G.rank((1, 2)) == 5
        assert [G.rank(a) for a in G.elements()] == list(range(6))
        assert str(G) == "Z/2 x Z/3"

    def test_bad_modulus(self):
        with pytest.raises(RangeError):
            FiniteAbelianGroup((1,))
        with pytest.raises(RangeError):
            FiniteAbelianGroup(())
        with pytest.raises(RangeError):
            FiniteAbelianGroup.cyclic(2).unrank(2)

    def test_arithmetic(self):
        G = FiniteAbelianGroup((4,))
        assert G.add((3,), (2,)) == (1,)
        assert G.neg((1,)) == (3,)
        assert G.scale(3, (3,)) == (1,)

    def test_divisors(self):
        assert elementary_divisors([12]) == [3, 4]
        assert invariants_from_divisors([2, 4, 3]) == [2, 12]
        assert invariants_from_divisors([]) == []

    def test_result_str(self):
        assert str(HomologyResult(1, 2, [3])) == "Z^2 + Z/3"
        assert str(HomologyResult(0, 0)) == "0"


@pytest.mark.unit
class TestHomology:
    """Test homology of the cycle-set and LND complexes."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_trivial_cycle_sets_are_free(self, n):
        results = betti_table(trivial_cycle_set(n), 3)
        assert [r.betti for r in results] == [n, n**2, n**3]
        assert all(not r.torsion for r in results)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_trivial_cycle_sets_are_free_in_degree_four(self, n):
        results = betti_table(trivial_cycle_set(n), 4)
        assert [r.betti for r in results] == [n, n**2, n**3, n**4]
        assert all(not r.torsion for r in results)

    def test_orbits(self, square_free3, shift2, trivial3):
        assert orbits(square_free3) == [[0], [1, 2]]
        assert orbits(shift2) == [[0, 1]]
        assert orbits(trivial3) == [[0], [1], [2]]

    @pytest.mark.parametrize("name", sorted(CYCLE_SETS))
    def test_first_betti_counts_orbits(self, name):
        C = CYCLE_SETS[name]
        (first,) = betti_table(C, 1)
        assert first.betti == len(orbits(C))

    @pytest.mark.parametrize("name", sorted(CYCLE_SETS))
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_betti_bound(self, name, n):
        check = betti_bound_check(CYCLE_SETS[name], n)
        assert check.passed, check.to_dict()

    @pytest.mark.slow
    def test_size_four_class_count(self, size_four_cycle_sets):
        assert len(size_four_cycle_sets) == 23

    @pytest.mark.slow
    @pytest.mark.parametrize("index", range(23))
    def test_size_four_orbits_and_betti_bound(self, size_four_cycle_sets, index):
        C = size_four_cycle_sets[index]
        (first,) = betti_table(C, 1)
        assert first.betti == len(orbits(C))
        for n in (1, 2, 3):
            check = betti_bound_check(C, n)
            assert check.passed, check.to_dict()

    def test_table_matches_single_degree(self, r3):
        complex_ = lnd_complex(r3, 2)
        table = homology_table(complex_, [1, 2])
        assert [r.to_dict() for r in table] == [homology_at(complex_, k).to_dict() for k in (1, 2)]

    def test_zero_degree(self, trivial2):
        complex_ = cycle_set_complex(trivial2, 1)
        assert homology_at(complex_, 0).betti == 1


@pytest.mark.unit
class TestCohomology:
    """Test cohomology with finite coefficients."""

    @pytest.mark.parametrize("name", sorted(CYCLE_SETS))
    def test_first_cohomology_counts_orbits(self, name, z2):
        C = CYCLE_SETS[name]
        result = cohomology_groups(C, 1, z2)
        assert result.order == first_cohomology_by_orbits(C, z2)
        assert result.passed and result.to_dict()["orbit_check"]["passed"]

    def test_orbit_count_report_flags_mismatch(self, trivial2, z2):
        report = orbit_count_report(trivial2, z2, 3)
        assert not report.passed
        assert report.failures == [{"order": 3, "expected": 4}]
        assert report.details == {"orbits": 2}

    def test_trivial_second_cohomology(self, trivial2, z2):
        result = cohomology_groups(trivial2, 2, z2)
        assert result.cocycles == 16
        assert result.coboundaries == 1
        assert result.invariants == [2, 2, 2, 2]
        assert result.orbit_check is None and "orbit_check" not in result.to_dict()

    def test_product_coefficients(self, trivial2):
        result = cohomology_groups(trivial2, 1, FiniteAbelianGroup((2, 3)))
        assert result.order == 36
        assert result.to_dict()["coefficients"] == [2, 3]

    def test_braided_target(self, r3, z2):
        plain = cohomology_groups(r3, 2, z2)
        assert plain.order >= 1
        assert plain.cocycles % plain.coboundaries == 0

    def test_unsupported_degree(self, trivial2, z2):
        with pytest.raises(UnsupportedDegree):
            cohomology_groups(trivial2, 3, z2)
