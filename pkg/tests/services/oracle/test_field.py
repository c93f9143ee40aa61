"""GF(q) 연산 표 테스트"""

import pytest

from src.services.oracle import field_tables


class TestFieldTables:
    def test_prime_field(self) -> None:
        f = field_tables(5)

        assert (f.p, f.degree) == (5, 1)
        assert f.add[3][4] == 2
        assert f.mul[3][4] == 2
        assert f.neg[2] == 3
        assert f.inv[2] == 3

    def test_extension_field(self) -> None:
        f = field_tables(4)

        assert (f.p, f.degree) == (2, 2)
        assert f.add[1][1] == 0
        # α² = α + 1
        assert f.mul[2][2] == 3
        assert all(f.mul[x][f.inv[x]] == 1 for x in range(1, 4))

    def test_inverse_table_gf9(self) -> None:
        f = field_tables(9)
        assert all(f.mul[x][f.inv[x]] == 1 for x in range(1, 9))

    def test_cached(self) -> None:
        assert field_tables(8) is field_tables(8)

    def test_not_prime_power_raises(self) -> None:
        with pytest.raises(ValueError):
            field_tables(6)
