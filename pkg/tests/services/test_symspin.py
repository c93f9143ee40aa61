"""스핀 지표 차수와 (*) 부등식 테스트"""

import pytest
from pydantic import ValidationError

from src.schemas.spin import SpinFamilyIndex, StrictPartition
from src.services.symspin import (
    chaining_check,
    coverage_check,
    family_degree,
    odd_part_factorial,
    ratio_identity_check,
    spin_degree,
    star_inequality,
    star_threshold,
    strict_partitions,
)


class TestSpinDegree:
    @pytest.mark.parametrize(
        ("parts", "expected"),
        [((3,), 2), ((3, 2, 1), 4), ((5, 1), 16), ((4, 2), 20), ((4, 1), 6)],
    )
    def test_values(self, parts: tuple[int, ...], expected: int) -> None:
        assert spin_degree(StrictPartition(parts=parts)) == expected

    def test_odd_part_factorial(self) -> None:
        assert odd_part_factorial(6) == 45
        assert odd_part_factorial(9) == 2835


class TestStrictPartition:
    def test_properties(self) -> None:
        partition = StrictPartition.of(5, 3, 1)
        assert (partition.n, partition.m) == (9, 3)

    @pytest.mark.parametrize("parts", [(), (2, 2), (1, 3), (3, 0)])
    def test_invalid_raises(self, parts: tuple[int, ...]) -> None:
        with pytest.raises(ValidationError):
            StrictPartition(parts=parts)

    def test_enumeration_order(self) -> None:
        result = [p.parts for p in strict_partitions(6)]
        assert result == [(6,), (5, 1), (4, 2), (3, 2, 1)]

    def test_counts(self) -> None:
        counts = [sum(1 for _ in strict_partitions(n)) for n in range(5, 11)]
        assert counts == [3, 4, 5, 6, 8, 10]


class TestFamilies:
    def test_index(self) -> None:
        index = SpinFamilyIndex(level=2)

        assert index.p1.parts == (5, 1)
        assert index.p2.parts == (7, 3)
        assert (index.n1, index.n2) == (6, 10)

    def test_n_8_1_is_120(self) -> None:
        assert SpinFamilyIndex(level=8).n1 == 120

    def test_degrees(self) -> None:
        assert [family_degree(level, 1) for level in (1, 2, 3)] == [1, 16, 292864]
        assert [family_degree(level, 2) for level in (1, 2)] == [2, 768]

    def test_bad_family_raises(self) -> None:
        with pytest.raises(ValueError, match="family"):
            SpinFamilyIndex(level=1).partition(3)

    def test_bad_level_raises(self) -> None:
        with pytest.raises(ValidationError):
            SpinFamilyIndex(level=0)

    @pytest.mark.parametrize("family", [1, 2])
    def test_ratio_identities(self, family: int) -> None:
        assert all(ratio_identity_check(level, family) for level in range(1, 21))


class TestStarInequality:
    def test_small_levels(self) -> None:
        assert star_inequality(1) == (True, False)
        # χ_2^1(1)² = 256 < 9!_{2'} = 2835
        assert star_inequality(2) == (False, False)

    def test_holds_from_8(self) -> None:
        assert all(star_inequality(level) == (True, True) for level in range(8, 51))

    def test_threshold(self) -> None:
        assert star_threshold(50) == (8, 8)

    def test_threshold_none_below(self) -> None:
        assert star_threshold(5) == (None, None)

    def test_chaining(self) -> None:
        assert all(chaining_check(level) for level in range(8, 16))


class TestCoverage:
    @pytest.mark.parametrize(
        ("n", "witness"),
        [(5, (4, 1)), (6, (4, 2)), (7, (5, 2)), (8, (6, 2)), (9, (5, 3, 1)), (10, (6, 3, 1))],
    )
    def test_witness(self, n: int, witness: tuple[int, ...]) -> None:
        report = coverage_check(n)

        assert report.witness.parts == witness
        assert report.passed
        assert report.note == "degree-level only"

    def test_max_degree_6(self) -> None:
        report = coverage_check(6)
        assert (report.max_degree, report.partitions_searched) == (20, 4)

    def test_all_pass_to_40(self) -> None:
        assert all(coverage_check(n).passed for n in range(5, 41))

    @pytest.mark.parametrize("n", [4, 120])
    def test_out_of_range_raises(self, n: int) -> None:
        with pytest.raises(ValueError):
            coverage_check(n)
