"""Verification suite 모듈

사용법:
    from src.services.suites import get_suite

    suite = get_suite("symspin")
    records = suite.run(GridConfig(l_max=50))

suite 이름:
    - "regclasses", "crosschar", "defchar", "symspin", "oracle": "all" 에 포함
    - "survey": 전체 family 조사 (실패가 정상적으로 나오므로 "all" 에서 제외)
"""

from src.services.suites.base import Suite
from src.services.suites.crosschar import CrossCharSuite, SurveySuite
from src.services.suites.defchar import DefCharSuite
from src.services.suites.oracle import OracleSuite
from src.services.suites.regclasses import RegClassesSuite
from src.services.suites.symspin import SymSpinSuite

__all__ = ["ALL_SUITES", "SUITE_NAMES", "Suite", "get_suite", "set_suite"]

ALL_SUITES = ("regclasses", "crosschar", "defchar", "symspin", "oracle")
SUITE_NAMES = (*ALL_SUITES, "survey", "all")

_suites: dict[str, Suite] = {}


def _create(name: str) -> Suite:
    if name == "regclasses":
        return RegClassesSuite()
    if name == "crosschar":
        return CrossCharSuite()
    if name == "defchar":
        return DefCharSuite()
    if name == "symspin":
        return SymSpinSuite()
    if name == "oracle":
        return OracleSuite()
    if name == "survey":
        return SurveySuite()
    raise ValueError(f"Unknown suite: {name!r}")


def get_suite(name: str) -> Suite:
    """이름으로 suite 반환 ("all" 은 report.run 에서 처리)"""
    if name not in _suites:
        _suites[name] = _create(name)
    return _suites[name]


def set_suite(name: str, suite: Suite | None) -> None:
    """suite 교체 (테스트용), None 이면 기본 구현으로 복원"""
    if suite is None:
        _suites.pop(name, None)
    else:
        _suites[name] = suite
