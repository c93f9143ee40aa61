"""Suite 실행 테스트 (작은 격자)"""

import pytest

from src.schemas.report import CheckRecord, GridConfig
from src.services.suites.crosschar import CrossCharSuite
from src.services.suites.defchar import DefCharSuite
from src.services.suites.oracle import OracleSuite
from src.services.suites.regclasses import RegClassesSuite
from src.services.suites.symspin import SymSpinSuite


def by_id(records: list[CheckRecord], check_id: str) -> list[CheckRecord]:
    return [r for r in records if r.check_id == check_id]


def no_failures(records: list[CheckRecord]) -> bool:
    return all(r.status != "fail" for r in records)


class TestRegClassesSuite:
    def test_small_grid(self, small_grid: GridConfig) -> None:
        records = RegClassesSuite().run(small_grid)

        assert no_failures(records)
        assert {"nreg_bound", "two_regular_classes", "zsigmondy_exists", "center_gcd"} <= {
            r.check_id for r in records
        }

    def test_zsigmondy_exception_recorded(self, small_grid: GridConfig) -> None:
        records = RegClassesSuite().run(small_grid)
        (record,) = [
            r for r in by_id(records, "zsigmondy_exists") if r.params == {"e": "6", "q": "2"}
        ]
        assert (record.lhs, record.rhs, record.passed) == ("0", "0", True)

    def test_exception_groups_unsupported(self, small_grid: GridConfig) -> None:
        records = RegClassesSuite().run(small_grid)
        sp4_2 = [r for r in by_id(records, "nreg_bound") if r.params["group"] == "Sp4(2)"]

        assert sp4_2
        assert all(r.status == "unsupported" for r in sp4_2)

    def test_stored_verdict_provenance(self, small_grid: GridConfig) -> None:
        records = by_id(RegClassesSuite().run(small_grid), "two_regular_classes")
        (su3_3,) = [r for r in records if r.params["group"] == "SU3(3)"]
        assert su3_3.provenance == "stored_paper_value"


class TestCrossCharSuite:
    def test_residual_at_q2(self) -> None:
        records = CrossCharSuite().run(GridConfig(rank_max=6, q_max=2))

        assert no_failures(records)
        (residual_set,) = by_id(records, "residual_set")
        assert (residual_set.lhs, residual_set.rhs) == ("1", "1")
        rechecks = by_id(records, "star_exact_recheck")
        assert rechecks
        assert all(r.provenance == "stored_paper_value" for r in rechecks)

    def test_specials_unsupported(self) -> None:
        records = CrossCharSuite().run(GridConfig(rank_max=4, q_max=2))
        labels = {r.params["group"] for r in by_id(records, "star_special")}
        assert labels == {"B2(2)", "Sp4(2)"}


class TestDefCharSuite:
    def test_small_grid(self, small_grid: GridConfig) -> None:
        records = DefCharSuite().run(small_grid)

        assert no_failures(records)
        ids = {r.check_id for r in records}
        assert {"steinberg_square", "steinberg_twist", "small_rank_sum_SL3", "open_case"} <= ids

    def test_sl2_equality_present(self, small_grid: GridConfig) -> None:
        records = by_id(DefCharSuite().run(small_grid), "small_rank_sum_SL2")
        (at_3,) = [r for r in records if r.params["p"] == "3"]
        assert (at_3.lhs, at_3.rhs, at_3.status) == ("4", "4", "pass")

    def test_open_cases_unsupported(self, small_grid: GridConfig) -> None:
        records = by_id(DefCharSuite().run(small_grid), "open_case")

        assert [r.params["group"] for r in records] == ["Sp6(3)", "Sp8(3)"]
        assert all(r.status == "unsupported" and r.params["note"] == "open" for r in records)


class TestSymSpinSuite:
    def test_small_levels(self, small_grid: GridConfig) -> None:
        records = SymSpinSuite().run(small_grid)
        stars = {int(r.params["l"]): r for r in by_id(records, "star")}

        assert no_failures(records)
        assert sorted(stars) == list(range(1, 10))
        assert stars[2].status == "unsupported"
        assert (stars[2].lhs, stars[2].rhs) == ("256", "2835")
        assert stars[8].status == "pass"

    def test_threshold_and_index(self, small_grid: GridConfig) -> None:
        records = SymSpinSuite().run(small_grid)
        (threshold,) = by_id(records, "star_threshold")
        (index,) = by_id(records, "family_index")

        assert threshold.lhs == "8"
        assert threshold.passed
        assert index.lhs == "120"

    def test_coverage_range(self, small_grid: GridConfig) -> None:
        records = by_id(SymSpinSuite().run(small_grid), "coverage")

        assert [r.params["n"] for r in records] == ["5", "6", "7", "8"]
        assert records[1].params["witness"] == "4-2"


class TestOracleSuite:
    def test_q_up_to_5(self) -> None:
        records = OracleSuite().run(GridConfig(q_max=5))

        assert no_failures(records)
        assert {r.params["q"] for r in by_id(records, "oracle_order")} == {"3", "4", "5"}
        assert {r.params["q"] for r in by_id(records, "oracle_regular_classes")} == {"4", "5"}

    def test_q_capped(self) -> None:
        records = OracleSuite().run(GridConfig(q_max=20))
        assert max(int(r.params["q"]) for r in by_id(records, "oracle_order")) == 11


@pytest.mark.slow
class TestDefaultSettings:
    """GridConfig() 는 Settings 기본값 (rank ≤ 8, q ≤ 9, p ≤ 199) 으로 돈다"""

    def test_regclasses(self) -> None:
        records = RegClassesSuite().run(GridConfig())
        corollary = {r.params["group"] for r in by_id(records, "two_regular_classes")}

        assert no_failures(records)
        assert {"SL8(9)", "Sp16(9)", "E8(9)", "F4(2)", "2F4(8)"} <= corollary

    def test_defchar(self) -> None:
        records = DefCharSuite().run(GridConfig())
        groups = {r.params.get("group") for r in records}
        sl2 = by_id(records, "small_rank_sum_SL2")

        assert no_failures(records)
        assert {"SL4(9)", "SU5(4)", "SL5(8)", "E7(9)"} <= groups
        assert max(int(r.params["p"]) for r in sl2) == 199
