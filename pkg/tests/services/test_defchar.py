"""정의 표수 부등식 테스트"""

import pytest

from src.schemas.lie import GroupSpec
from src.services.defchar import (
    NotApplicableError,
    open_cases,
    premet_closed_form_checks,
    small_rank_sum_check,
    steinberg_square_check,
    subgroup_degree_check,
    symplectic_degree_check,
    twist_scaling_check,
    unitary_estimate_check,
)
from src.services.regclasses import grid_specs


class TestSteinbergSquare:
    def test_sl2_5(self) -> None:
        check = steinberg_square_check(GroupSpec.of("A", 2, q=5))

        assert (check.lhs, check.rhs) == (25, 24)
        assert check.strict
        assert check.passed

    def test_grid_strict(self) -> None:
        for spec in grid_specs(8, 9):
            assert steinberg_square_check(spec).passed, spec.label


class TestTwistScaling:
    def test_sl2_3_squared(self) -> None:
        check = twist_scaling_check(GroupSpec.of("A", 2, q=3), 2)

        assert check.params["group"] == "SL2(9)"
        assert (check.lhs, check.rhs) == (81, 80)
        assert check.passed

    def test_prime_power_not_applicable(self) -> None:
        with pytest.raises(NotApplicableError):
            twist_scaling_check(GroupSpec.of("A", 2, q=4), 2)

    def test_suzuki_not_applicable(self) -> None:
        with pytest.raises(NotApplicableError):
            twist_scaling_check(GroupSpec.of("2B2", q=8), 2)

    def test_bad_r_raises(self) -> None:
        with pytest.raises(ValueError):
            twist_scaling_check(GroupSpec.of("A", 2, q=3), 0)


class TestSmallRankSums:
    def test_sl2_equality_at_3(self) -> None:
        check = small_rank_sum_check("SL2", 3)

        assert (check.lhs, check.rhs) == (4, 4)
        assert not check.strict
        assert check.passed

    def test_sl3_at_7(self) -> None:
        check = small_rank_sum_check("SL3", 7)

        assert (check.lhs, check.rhs) == (20475, 5504)
        assert check.check_id == "small_rank_sum_SL3"

    def test_sp4_at_3(self) -> None:
        check = small_rank_sum_check("Sp4", 3)

        assert (check.lhs, check.rhs) == (736, 320)
        assert check.metadata["exceeds_p6"] == "True"

    def test_su3_at_2(self) -> None:
        check = small_rank_sum_check("SU3", 2)
        assert (check.lhs, check.rhs) == (9, 9)

    @pytest.mark.parametrize(("kind", "p"), [("SL2", 2), ("Sp4", 2), ("SL3", 5), ("SU3", 7)])
    def test_trivial_centre_not_applicable(self, kind: str, p: int) -> None:
        with pytest.raises(NotApplicableError):
            small_rank_sum_check(kind, p)  # type: ignore[arg-type]

    def test_sl4_residues(self) -> None:
        faithful = small_rank_sum_check("SL4", 5, residue=1)
        half = small_rank_sum_check("SL4", 5, residue=2)

        assert (faithful.lhs, faithful.rhs) == (3681920, 464256)
        assert (half.lhs, half.rhs) == (3998980, 464256)
        assert faithful.params["residue"] == "1"

    def test_sl4_no_faithful_at_3(self) -> None:
        with pytest.raises(NotApplicableError):
            small_rank_sum_check("SL4", 3, residue=1)
        assert small_rank_sum_check("SU4", 3, residue=1).passed

    def test_non_prime_raises(self) -> None:
        with pytest.raises(ValueError, match="prime"):
            small_rank_sum_check("SL2", 9)

    def test_all_pass_small_primes(self) -> None:
        for p in (3, 5, 7, 11, 13, 17, 19, 23):
            for kind in ("SL2", "SL3", "SU3", "Sp4"):
                try:
                    check = small_rank_sum_check(kind, p)  # type: ignore[arg-type]
                except NotApplicableError:
                    continue
                assert check.passed, (kind, p)


class TestPremetClosedForms:
    def test_all_pass(self) -> None:
        checks = premet_closed_form_checks(bound=6)

        assert len(checks) == 6 + 7 * 7
        assert all(c.passed for c in checks)

    def test_c2_equality_at_origin(self) -> None:
        checks = premet_closed_form_checks(bound=2)
        origin = next(c for c in checks if c.params == {"i": "0", "j": "0"})
        assert (origin.lhs, origin.rhs) == (4, 4)


class TestSubgroupDegrees:
    def test_e6_trivial_centre_not_applicable(self) -> None:
        with pytest.raises(NotApplicableError):
            subgroup_degree_check("E6", 0, 2)

    def test_e6_4(self) -> None:
        check = subgroup_degree_check("E6", 0, 4)

        assert check.lhs == 4**48
        assert check.passed

    @pytest.mark.parametrize("q", [3, 5, 7, 9])
    def test_half_spin(self, q: int) -> None:
        assert subgroup_degree_check("HSpin8", 0, q).passed

    @pytest.mark.parametrize(("n", "q"), [(5, 3), (6, 3), (5, 7), (3, 9), (4, 9), (3, 27)])
    def test_symplectic(self, n: int, q: int) -> None:
        assert subgroup_degree_check("Spn", n, q).passed

    def test_symplectic_open_at_prime(self) -> None:
        with pytest.raises(NotApplicableError, match="open"):
            symplectic_degree_check(3, GroupSpec.of("C", 3, q=3).q)

    @pytest.mark.parametrize(
        ("kind", "n", "q"), [("Spin2n+1", 3, 9), ("Spin", 5, 9), ("Spin", 3, 27)]
    )
    def test_spin(self, kind: str, n: int, q: int) -> None:
        assert subgroup_degree_check(kind, n, q).passed  # type: ignore[arg-type]

    def test_spin6_as_sl4(self) -> None:
        check = subgroup_degree_check("Spin", 3, 9)

        # (9/3)^9 · 3^3 = 3^12, |SL4(9)|_{3'} = 80 · 728 · 6560
        assert check.params["group"] == "SL4(9)"
        assert (check.lhs, check.rhs) == (3**24, 382054400)
        assert check.passed

    def test_spin_requires_f_at_least_2(self) -> None:
        with pytest.raises(NotApplicableError):
            subgroup_degree_check("Spin", 3, 3)

    @pytest.mark.parametrize("sign", [1, -1])
    def test_orthogonal(self, sign: int) -> None:
        for q in (3, 5, 7, 9):
            for n in (4, 5, 6):
                assert subgroup_degree_check("SO2n", n, q, sign=sign).passed

    def test_linear(self) -> None:
        for kind in ("SLn", "SUn"):
            for q in (2, 3, 4):
                assert subgroup_degree_check(kind, 6, q).passed  # type: ignore[arg-type]

    def test_linear_small_n_not_applicable(self) -> None:
        with pytest.raises(NotApplicableError):
            subgroup_degree_check("SLn", 5, 2)

    def test_rank5_char2(self) -> None:
        check = subgroup_degree_check("SL5", 0, 8)

        assert check.lhs == (5 * 1024**2) ** 2
        assert check.passed
        with pytest.raises(NotApplicableError):
            subgroup_degree_check("SL5", 0, 4)

    def test_su5_4_exterior_square(self) -> None:
        check = subgroup_degree_check("SU5", 0, 4)

        assert check.lhs == (10 * 4**10) ** 2
        assert check.rhs == 254840625
        assert check.passed
        with pytest.raises(NotApplicableError):
            subgroup_degree_check("SU5", 0, 2)

    def test_bad_sign_raises(self) -> None:
        with pytest.raises(ValueError, match="sign"):
            subgroup_degree_check("SO2n", 4, 3, sign=0)


class TestUnitaryEstimate:
    def test_value(self) -> None:
        check = unitary_estimate_check(2, 2)
        assert (check.lhs, check.rhs) == (32, 27)

    def test_grid(self) -> None:
        assert all(unitary_estimate_check(k, q).passed for k in range(2, 41) for q in (2, 3, 9))

    def test_small_k_raises(self) -> None:
        with pytest.raises(ValueError):
            unitary_estimate_check(1, 2)


class TestOpenCases:
    def test_cases_up_to_9(self) -> None:
        groups = [case["group"] for case in open_cases(9)]
        assert groups == ["Sp6(3)", "Sp8(3)", "2D4(9)", "Sp6(5)", "Sp8(5)", "Sp6(7)", "Sp8(7)"]
