"""Verification suite Protocol

suite 하나는 격자 설정을 받아 CheckRecord 목록을 돌려준다 (순서는 report 에서 정렬).
"""

from typing import Protocol

from src.schemas.checks import DefCharCheck
from src.schemas.report import CheckRecord, GridConfig


class Suite(Protocol):
    """검증 suite 인터페이스

    구현체:
    - RegClassesSuite, CrossCharSuite, SurveySuite
    - DefCharSuite, SymSpinSuite, OracleSuite
    """

    name: str

    def run(self, config: GridConfig) -> list[CheckRecord]:
        """격자 위의 모든 검사를 실행

        Args:
            config: CLI 격자 설정 (None 인 값은 Settings 기본값 사용)

        Returns:
            list[CheckRecord]: 검사 결과 (정렬 전)
        """
        ...


def from_defchar(check: DefCharCheck) -> CheckRecord:
    params: dict[str, object] = {**check.params}
    if check.tight:
        params["tight"] = True
    return CheckRecord.build(check.check_id, params, check.lhs, check.rhs, check.passed)
