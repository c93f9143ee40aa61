"""정칙 반단순 류 하한과 "정칙 류 두 개" 판정 테스트"""

from fractions import Fraction

import pytest

from src.schemas.lie import GroupSpec
from src.services.lie import UnsupportedGroupError, torus_entries
from src.services.regclasses import (
    NON_QUASI_SIMPLE,
    corollary_margin,
    grid_specs,
    group_key,
    nreg_lower_bound,
    routed_bound,
    scan_all,
    two_regular_classes_check,
)


class TestNregLowerBound:
    def test_formula_floor(self) -> None:
        spec = GroupSpec.of("A", 6, q=3)
        entry = torus_entries(spec)[1]
        bound = nreg_lower_bound(spec, entry)

        # (3^5 - 1) / 6
        assert bound.exact_bound == Fraction(242, 6)
        assert bound.bound == 40
        assert bound.source == "table_formula"
        assert bound.certified

    def test_zsigmondy_6_2_table(self) -> None:
        spec = GroupSpec.of("A", 6, q=2)
        first, second = (nreg_lower_bound(spec, e) for e in torus_entries(spec))

        assert (first.torus_order, first.bound, first.source) == (63, 9, "zsigmondy_6_2_table")
        assert (second.torus_order, second.bound) == (31, 5)

    def test_negative_formula_clamped(self) -> None:
        spec = GroupSpec.of("A", 2, q=2)
        bound = nreg_lower_bound(spec, torus_entries(spec)[1])
        assert bound.bound == 0

    def test_exception_group_raises(self) -> None:
        spec = GroupSpec.of("C", 2, q=2)
        with pytest.raises(UnsupportedGroupError):
            nreg_lower_bound(spec, torus_entries(spec)[0])

    def test_routed_bound_marks_exception_table(self) -> None:
        spec = GroupSpec.of("2A", 3, q=3)
        bound = routed_bound(spec, torus_entries(spec)[0])

        assert bound.source == "exception_table"
        assert not bound.certified

    @pytest.mark.parametrize(
        ("family", "rank", "torus_order", "count"),
        [
            ("A", 6, 63, 9),
            ("A", 7, 63, 9),
            ("2A", 4, 9, 2),
            ("2A", 6, 21, 3),
            ("2A", 7, 63, 9),
            ("C", 3, 9, 1),
            ("D", 4, 27, 3),
            ("2D", 4, 9, 1),
        ],
    )
    def test_zsigmondy_6_2_list(self, family: str, rank: int, torus_order: int, count: int) -> None:
        spec = GroupSpec.of(family, rank, q=2)  # type: ignore[arg-type]
        (entry,) = [e for e in torus_entries(spec) if e.e == 6]
        bound = nreg_lower_bound(spec, entry)

        assert (bound.torus_order, bound.bound) == (torus_order, count)
        assert bound.source == "zsigmondy_6_2_table"


class TestTwoRegularClasses:
    def test_sl2_5(self) -> None:
        spec = GroupSpec.of("A", 2, q=5)

        assert corollary_margin(spec) == (1, 1)
        assert two_regular_classes_check(spec)

    def test_exceptional_margin(self) -> None:
        # Φ_24(2) = 241, (241 - 1) / 24 = 10, |Z| + 1 = 2
        assert corollary_margin(GroupSpec.of("E8", q=2)) == (10, 2)

    def test_stored_verdict(self) -> None:
        assert two_regular_classes_check(GroupSpec.of("C", 2, q=2))
        assert two_regular_classes_check(GroupSpec.of("2F4", q=2))

    def test_not_quasi_simple_raises(self) -> None:
        with pytest.raises(ValueError, match="not quasi-simple"):
            two_regular_classes_check(GroupSpec.of("A", 2, q=3))

    def test_grid_all_true(self) -> None:
        for spec in grid_specs(5, 7):
            if group_key(spec) in NON_QUASI_SIMPLE:
                continue
            assert two_regular_classes_check(spec), spec.label


class TestGrid:
    def test_grid_specs_contents(self) -> None:
        labels = {spec.label for spec in grid_specs(2, 3)}

        assert {"SL2(2)", "SL2(3)", "Sp4(3)", "G2(3)"} <= labels
        assert not any(label.startswith("2B2") for label in labels)
        assert not any(label.startswith("SU") for label in labels)

    def test_scan_all_sources(self) -> None:
        sources = {b.source for b in scan_all(3, 3)}
        assert {"table_formula", "exception_table"} <= sources

    def test_scan_all_skips_2f4_2(self) -> None:
        labels = {b.spec.label for b in scan_all(4, 2)}
        assert "2F4(2)" not in labels

    def test_scan_all_small_grid_raises(self) -> None:
        with pytest.raises(ValueError):
            scan_all(1, 5)
