"""Tests for enumeration, canonical forms, retraction and the N_m table."""

from concurrent.futures import ThreadPoolExecutor
from math import factorial

import pytest

from braided_homology.core.errors import BudgetExceeded, NotSquareFree, RangeError, TooLarge
from braided_homology.core.tables import relabel
from braided_homology.multipermutation.canonical import (
    are_isomorphic,
    automorphism_count,
    canonical_form,
    canonical_table,
)
from braided_homology.multipermutation import enumerate as enumeration
from braided_homology.multipermutation.enumerate import EnumerationConfig, count_cycle_sets, enumerate_cycle_sets
from braided_homology.multipermutation.nm import nm_table
from braided_homology.multipermutation.retraction import (
    check_doubling,
    doubling_extension,
    doubling_tower,
    is_square_free,
    mp_level,
    retract,
    retraction_map,
)
from braided_homology.structures.cycle_set import trivial_cycle_set, validate_cycle_set


@pytest.mark.unit
class TestEnumeration:
    """Test cycle-set enumeration counts."""

    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 5)])
    def test_counts_up_to_iso(self, n, expected):
        assert count_cycle_sets(n) == expected

    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 2)])
    def test_square_free_counts(self, n, expected):
        assert count_cycle_sets(n, square_free=True) == expected

    @pytest.mark.parametrize("n", [2, 3])
    def test_labeled_count_matches_orbit_sum(self, n):
        orbit_sum = sum(
            factorial(n) // automorphism_count(C)
            for C in enumerate_cycle_sets(EnumerationConfig(n, up_to_iso=True))
        )
        assert orbit_sum == count_cycle_sets(n, up_to_iso=False)

    def test_representatives_are_canonical(self):
        for C in enumerate_cycle_sets(EnumerationConfig(3, up_to_iso=True)):
            assert canonical_form(C) == C

    def test_square_free_flag(self):
        for C in enumerate_cycle_sets(EnumerationConfig(3, square_free=True)):
            assert is_square_free(C)

    def test_budget_exhausted(self):
        with pytest.raises(BudgetExceeded) as exc:
            count_cycle_sets(4, budget=1)
        assert exc.value.to_dict()["incomplete"] is True

    def test_size_must_be_positive(self):
        with pytest.raises(RangeError):
            EnumerationConfig(0)

    def test_parallel_matches_serial(self):
        serial = list(enumerate_cycle_sets(EnumerationConfig(3, up_to_iso=True)))
        parallel = list(enumerate_cycle_sets(EnumerationConfig(3, up_to_iso=True, workers=2)))
        assert sorted(C.dot for C in parallel) == sorted(C.dot for C in serial)

    def test_parallel_budget_keeps_finished_subtrees(self, monkeypatch):
        search_subtree = enumeration._search_subtree

        def first_seed_only(n, square_free, up_to_iso, row0, limit):
            if row0 != (0, 1):
                raise BudgetExceeded(f"enumeration (size {n}) budget of {limit} nodes exhausted")
            return search_subtree(n, square_free, up_to_iso, row0, limit)

        monkeypatch.setattr(enumeration, "ProcessPoolExecutor", ThreadPoolExecutor)
        monkeypatch.setattr(enumeration, "_search_subtree", first_seed_only)
        found = []
        with pytest.raises(BudgetExceeded) as exc:
            for C in enumerate_cycle_sets(EnumerationConfig(2, workers=2)):
                found.append(C)
        assert found
        assert exc.value.partial == found
        assert all(C.dot[0] == (0, 1) for C in found)

    @pytest.mark.slow
    def test_size_four(self):
        assert count_cycle_sets(4) == 23
        assert count_cycle_sets(4, square_free=True) == 5


@pytest.mark.unit
class TestCanonicalForms:
    """Test canonical labelings and isomorphism."""

    def test_relabeling_invariance(self, square_free3):
        moved = validate_cycle_set(relabel(square_free3.dot, (2, 0, 1)))
        assert canonical_form(moved) == canonical_form(square_free3)
        assert are_isomorphic(moved, square_free3)

    def test_not_isomorphic(self, square_free3, trivial3, trivial2):
        assert not are_isomorphic(square_free3, trivial3)
        assert not are_isomorphic(trivial2, trivial3)

    def test_graph_path_above_guard(self, isolated_config, square_free3):
        isolated_config.set("canonical.max_size", 2)
        moved = validate_cycle_set(relabel(square_free3.dot, (1, 2, 0)))
        assert are_isomorphic(moved, square_free3)

    def test_size_guard(self, square_free3):
        with pytest.raises(TooLarge):
            canonical_table(square_free3.dot, max_size=2)

    def test_automorphisms(self, trivial3, square_free3):
        assert automorphism_count(trivial3) == 6
        assert automorphism_count(square_free3) == 2


@pytest.mark.unit
class TestRetraction:
    """Test retraction, multipermutation level and the doubling construction."""

    def test_retraction_map(self, square_free3):
        assert retraction_map(square_free3) == (0, 1, 1)
        assert retract(square_free3).dot == trivial_cycle_set(2).dot

    def test_levels(self, square_free3, shift2, trivial3):
        assert mp_level(square_free3).to_dict() == {"levels": [3, 2, 1], "level": 2, "multipermutation": True}
        assert mp_level(shift2).level == 1
        assert mp_level(trivial3).level == 1
        assert mp_level(validate_cycle_set([[0]])).level == 0

    def test_doubling_needs_square_free(self, shift2):
        with pytest.raises(NotSquareFree):
            doubling_extension(shift2)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_doubling_tower(self, m):
        tower = doubling_tower(m)
        assert [C.size for C in tower] == [2**i for i in range(m + 1)]
        for smaller, larger in zip(tower, tower[1:]):
            report = check_doubling(smaller, larger)
            assert report.passed, report.first_failure()
            assert are_isomorphic(retract(larger), smaller)
        assert mp_level(tower[-1]).level == m

    @pytest.mark.slow
    def test_doubling_tower_to_six(self):
        tower = doubling_tower(6)
        for smaller, larger in zip(tower, tower[1:]):
            assert check_doubling(smaller, larger).passed
        assert mp_level(tower[-1]).level == 6


@pytest.mark.unit
class TestNmTable:
    """Test the minimal sizes per multipermutation level."""

    def test_first_levels(self):
        table = nm_table(2)
        assert table.values == {0: 1, 1: 2, 2: 3}
        assert table.complete
        assert table.searched_size == 3
        assert table.to_dict()["values"] == {"0": 1, "1": 2, "2": 3}

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as exc:
            nm_table(3, budget=1)
        assert exc.value.to_dict()["incomplete"] is True

    @pytest.mark.slow
    def test_up_to_level_four(self):
        table = nm_table(4)
        assert table.values == {0: 1, 1: 2, 2: 3, 3: 5, 4: 6}
        assert table.monotone()
        assert table.doubling_bound_failures() == []
