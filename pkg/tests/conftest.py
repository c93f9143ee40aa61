from collections.abc import Generator

import pytest

from src.config import get_settings
from src.schemas.report import CheckRecord, GridConfig
from src.services.suites import set_suite


@pytest.fixture(autouse=True)
def clear_settings_cache() -> Generator[None, None, None]:
    """환경 변수를 바꾸는 테스트가 다른 테스트에 새지 않도록"""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def small_grid() -> GridConfig:
    return GridConfig(rank_max=3, q_max=4, p_max=7, l_max=9, n_max=8)


class StubSuite:
    """정해진 레코드를 돌려주는 suite"""

    def __init__(self, name: str, records: list[CheckRecord]) -> None:
        self.name = name
        self.records = records

    def run(self, config: GridConfig) -> list[CheckRecord]:
        return self.records


@pytest.fixture
def stub_suites() -> Generator[dict[str, StubSuite], None, None]:
    """모든 suite 를 stub 으로 교체 ("all" 병합 테스트용)"""
    stubs = {
        "regclasses": StubSuite(
            "regclasses", [CheckRecord.build("center_gcd", {"group": "SL2(5)"}, 2, 2, True)]
        ),
        "crosschar": StubSuite("crosschar", []),
        "defchar": StubSuite(
            "defchar", [CheckRecord.build("steinberg_square", {"q": 2}, 4, 3, True)]
        ),
        "symspin": StubSuite("symspin", [CheckRecord.build("star", {"l": 8}, 2, 1, True)]),
        "oracle": StubSuite(
            "oracle", [CheckRecord.build("oracle_order", {"q": 5}, 120, 120, True)]
        ),
    }
    for name, stub in stubs.items():
        set_suite(name, stub)
    yield stubs
    for name in stubs:
        set_suite(name, None)
