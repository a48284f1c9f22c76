"""Tests for the core helpers, configuration and logging."""

import json

import pytest

from braided_homology.core.budget import SearchBudget
from braided_homology.core.errors import (
    BudgetExceeded,
    CycleViolation,
    InputError,
    NotLeftNondegenerate,
    ParseError,
    RangeError,
    SizeMismatch,
)
from braided_homology.core.matrix import IntMatrix
from braided_homology.core.report import MAX_WITNESSES, IdentityReport
from braided_homology.core.tables import (
    check_table,
    cycle_type,
    invert_columns,
    inverse_permutation,
    is_permutation,
    relabel,
)
from braided_homology.utils.config import Config, get_config, setting
from braided_homology.utils.logging import configure_logging, get_logger


@pytest.mark.unit
class TestTables:
    """Test operation-table helpers."""

    def test_check_table_freezes(self):
        table = check_table([[0, 1], [1, 0]], 2, 2, 2)
        assert table == ((0, 1), (1, 0))

    def test_check_table_rejects_shape(self):
        with pytest.raises(SizeMismatch):
            check_table([[0, 1], [1]], 2, 2, 2)

    def test_check_table_rejects_range(self):
        with pytest.raises(RangeError) as exc:
            check_table([[0, 2], [1, 0]], 2, 2, 2)
        assert exc.value.witness == [0, 1]

    def test_check_table_rejects_bool(self):
        with pytest.raises(RangeError):
            check_table([[True, 0], [0, 0]], 2, 2, 2)

    def test_permutations(self):
        assert is_permutation([2, 0, 1])
        assert not is_permutation([0, 0, 1])
        assert inverse_permutation([2, 0, 1]) == (1, 2, 0)

    def test_invert_columns(self):
        assert invert_columns(((0, 1), (1, 0))) == ((0, 1), (1, 0))
        assert invert_columns(((0, 0), (0, 1))) is None

    def test_relabel_transports_operation(self):
        table = ((1, 1), (0, 0))
        swapped = relabel(table, (1, 0))
        for a in range(2):
            for b in range(2):
                assert swapped[1 - a][1 - b] == 1 - table[a][b]

    def test_cycle_type(self):
        assert cycle_type([1, 0, 2, 4, 5, 3]) == (3, 2, 1)


@pytest.mark.unit
class TestIntMatrix:
    """Test exact integer matrices."""

    def test_product_and_identity(self):
        A = IntMatrix([[1, 2], [3, 4]])
        assert A @ IntMatrix.identity(2) == A
        assert (A @ A).to_lists() == [[7, 10], [15, 22]]

    def test_zero_row_matrix(self):
        Z = IntMatrix.zeros(0, 3)
        assert Z.shape == (0, 3)
        assert Z.is_zero()

    def test_from_columns_and_transpose(self):
        A = IntMatrix.from_columns([[1, 2], [3, 4], [5, 6]], 2)
        assert A.shape == (2, 3)
        assert A.transpose().row(2) == [5, 6]

    def test_determinant(self):
        assert IntMatrix([[2, 1], [7, 4]]).determinant() == 1
        assert IntMatrix([[1, 2], [2, 4]]).determinant() == 0

    def test_select_and_stack(self):
        A = IntMatrix([[1, 2, 3], [4, 5, 6]])
        assert A.select_columns([0, 2]).to_lists() == [[1, 3], [4, 6]]
        assert A.select_rows([1]).to_lists() == [[4, 5, 6]]
        assert A.hstack(IntMatrix.identity(2)).shape == (2, 5)

    def test_inconsistent_rows(self):
        with pytest.raises(ValueError):
            IntMatrix([[1, 2], [3]])


@pytest.mark.unit
class TestSearchBudget:
    """Test node budgets."""

    def test_charge_until_exhausted(self):
        budget = SearchBudget(3, "sample")
        budget.charge(3)
        assert budget.remaining() == 0
        with pytest.raises(BudgetExceeded) as exc:
            budget.charge()
        assert "sample" in exc.value.message

    def test_reset(self):
        budget = SearchBudget(2)
        budget.charge(2)
        budget.reset(5)
        assert budget.remaining() == 5

    def test_positive_limit(self):
        with pytest.raises(RangeError):
            SearchBudget(0)


@pytest.mark.unit
class TestIdentityReport:
    """Test check reports."""

    def test_witnesses_are_capped(self):
        report = IdentityReport("sample")
        for i in range(MAX_WITNESSES + 5):
            report.record(False, i=i)
        assert not report.passed
        assert report.checked == MAX_WITNESSES + 5
        assert len(report.failures) == MAX_WITNESSES
        assert report.first_failure() == {"i": 0}

    def test_absorb(self):
        outer, inner = IdentityReport("outer"), IdentityReport("inner")
        inner.record(True)
        inner.record(False, triple=(0, 1, 2))
        outer.absorb(inner)
        assert outer.checked == 2
        assert outer.failures == [{"check": "inner", "triple": (0, 1, 2)}]

    def test_to_dict_is_json(self):
        report = IdentityReport("sample")
        report.record(False, pair=(1, 2))
        data = report.to_dict()
        assert json.loads(json.dumps(data))["failures"] == [{"pair": [1, 2]}]


@pytest.mark.unit
class TestErrors:
    """Test the exception hierarchy."""

    def test_exit_codes(self):
        assert ParseError("bad").exit_code == 2
        assert SizeMismatch("bad").exit_code == 2
        assert CycleViolation("bad").exit_code == 1
        assert isinstance(RangeError("bad"), InputError)

    def test_witness_serialization(self):
        data = CycleViolation("cycle fails", witness=(0, 1, 2)).to_dict()
        assert data == {"error": "CycleViolation", "message": "cycle fails", "witness": [0, 1, 2]}

    def test_precondition_names_property(self):
        data = NotLeftNondegenerate(witness={"column": 1}).to_dict()
        assert data["missing"] == "left_nondegenerate"

    def test_budget_exceeded_carries_partial(self):
        exc = BudgetExceeded("out", partial=[1, 2], completed_size=3)
        data = exc.to_dict()
        assert data["incomplete"] is True
        assert data["partial_count"] == 2
        assert data["completed_size"] == 3


@pytest.mark.unit
class TestConfig:
    """Test configuration lookup order."""

    def test_builtin_defaults(self):
        assert get_config().get("complexes.max_degree") == 4
        assert get_config().get("canonical.max_size") == 8

    def test_file_overrides_default(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"complexes": {"max_degree": 2}}))
        assert Config(config_path=path).get("complexes.max_degree") == 2

    def test_environment_overrides_file(self, tmp_path, monkeypatch):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"enumeration": {"budget": 10}}))
        monkeypatch.setenv("BRAIDED_HOMOLOGY_ENUMERATION_BUDGET", "99")
        assert Config(config_path=path).get("enumeration.budget") == 99

    def test_malformed_file_is_a_parse_error(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("{not json")
        with pytest.raises(ParseError) as exc_info:
            Config(config_path=path)
        assert exc_info.value.exit_code == 2
        assert exc_info.value.witness["path"] == str(path)

    def test_file_must_hold_an_object(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("[1, 2]")
        with pytest.raises(ParseError):
            Config(config_path=path)

    def test_missing_file_means_defaults(self, tmp_path):
        assert Config(config_path=tmp_path / "absent.json").get_all() == {}

    def test_set_persists(self, tmp_path):
        path = tmp_path / "nested" / "config.json"
        config = Config(config_path=path)
        config.set("extensions.cochain_budget", 64)
        assert json.loads(path.read_text()) == {"extensions": {"cochain_budget": 64}}

    def test_setting_prefers_explicit_value(self):
        assert setting(7, "complexes.max_degree") == 7
        assert setting(None, "complexes.max_degree") == 4

    def test_unknown_key_default(self):
        assert get_config().get("no.such.key", "fallback") == "fallback"


@pytest.mark.unit
class TestLogging:
    """Test structured logging setup."""

    def test_logger_follows_reconfiguration(self, capsys):
        logger = get_logger("braided_homology.sample")
        try:
            configure_logging("INFO", "json")
            logger.info("sample event", size=3)
            record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
            assert record["event"] == "sample event"
            assert record["module"] == "braided_homology.sample"
            assert record["size"] == 3
            assert record["level"] == "info"

            configure_logging("ERROR", "json")
            logger.warning("filtered out")
            assert capsys.readouterr().err == ""
        finally:
            configure_logging()
