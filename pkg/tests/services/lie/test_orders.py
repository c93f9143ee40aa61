"""군 위수, 중심, Weyl 군, Sylow 순환성 테스트"""

import pytest

from src.schemas.lie import GroupSpec
from src.services.lie import (
    center_order,
    order,
    order_data,
    order_q_prime_part,
    positive_roots,
    sylow_cyclic,
    weyl_order,
)


class TestOrder:
    @pytest.mark.parametrize(
        ("family", "rank", "q", "expected"),
        [
            ("A", 2, 5, 120),
            ("A", 3, 2, 168),
            ("A", 3, 4, 60480),
            ("2A", 3, 3, 6048),
            ("C", 2, 3, 51840),
            ("G2", None, 2, 12096),
            ("2B2", None, 8, 29120),
        ],
    )
    def test_known_orders(self, family: str, rank: int | None, q: int, expected: int) -> None:
        spec = GroupSpec.of(family, rank, q=q)  # type: ignore[arg-type]
        assert order(spec) == expected

    def test_p_prime_part(self) -> None:
        assert order_q_prime_part(GroupSpec.of("A", 6, q=2)) == 615195

    def test_order_data_sl2(self) -> None:
        data = order_data(GroupSpec.of("A", 2, q=7))

        assert data.q_exponent == 1
        assert data.factors == {1: 1, 2: 1}

    def test_ree_uses_twisted_product(self) -> None:
        spec = GroupSpec.of("2G2", q=27)
        assert order(spec) == 27**3 * (27**3 + 1) * (27 - 1)

    def test_positive_roots(self) -> None:
        assert positive_roots(GroupSpec.of("E8", q=2)) == 120
        assert positive_roots(GroupSpec.of("D", 5, q=3)) == 20


class TestCenterOrder:
    @pytest.mark.parametrize(
        ("family", "rank", "q", "expected"),
        [
            ("A", 4, 5, 4),
            ("A", 3, 2, 1),
            ("C", 3, 3, 2),
            ("D", 4, 3, 4),
            ("D", 5, 3, 2),
            ("2E6", None, 2, 3),
            ("E8", None, 3, 1),
        ],
    )
    def test_values(self, family: str, rank: int | None, q: int, expected: int) -> None:
        spec = GroupSpec.of(family, rank, q=q)  # type: ignore[arg-type]
        assert center_order(spec) == expected


class TestWeylOrder:
    def test_classical(self) -> None:
        assert weyl_order(GroupSpec.of("A", 4, q=2)) == 24
        assert weyl_order(GroupSpec.of("B", 3, q=3)) == 48
        assert weyl_order(GroupSpec.of("D", 4, q=3)) == 192

    def test_exceptional(self) -> None:
        assert weyl_order(GroupSpec.of("E8", q=2)) == 696729600
        assert weyl_order(GroupSpec.of("2F4", q=8)) == 1152


class TestSylowCyclic:
    def test_cyclic(self) -> None:
        assert sylow_cyclic(GroupSpec.of("A", 2, q=5), 3)

    def test_non_cyclic(self) -> None:
        # |SL3(4)|_3 = 27, Φ_1(4)_3 = 3
        assert not sylow_cyclic(GroupSpec.of("A", 3, q=4), 3)

    def test_not_dividing_is_cyclic(self) -> None:
        assert sylow_cyclic(GroupSpec.of("A", 2, q=4), 7)

    def test_defining_characteristic_raises(self) -> None:
        with pytest.raises(ValueError, match="defining characteristic"):
            sylow_cyclic(GroupSpec.of("A", 2, q=9), 3)
