"""검증 보고서 모델

큰 정수는 모두 10진 문자열로 직렬화한다.
"""

from collections.abc import Mapping
from typing import Literal, Self

from pydantic import Field, model_validator

from src.constants import CheckStatus, Provenance
from src.schemas.base import BaseSchema

Status = Literal["pass", "fail", "skipped_cyclic", "unsupported"]
ProvenanceTag = Literal["computed", "stored_paper_value"]


class GridConfig(BaseSchema):
    """CLI 격자 설정 (None 이면 suite 별 설정 기본값)"""

    rank_max: int | None = None
    q_max: int | None = None
    p_max: int | None = None
    l_max: int | None = None
    n_max: int | None = None

    @model_validator(mode="after")
    def validate_positive(self) -> Self:
        for name, value in self.model_dump().items():
            if value is not None and value < 1:
                raise ValueError(f"{name} must be positive, got {value}")
        return self


class CheckRecord(BaseSchema):
    check_id: str
    params: dict[str, str]
    lhs: str
    rhs: str
    passed: bool = Field(alias="pass")
    provenance: ProvenanceTag = Provenance.COMPUTED
    status: Status

    @classmethod
    def build(
        cls,
        check_id: str,
        params: Mapping[str, object],
        lhs: int | str,
        rhs: int | str,
        passed: bool,
        *,
        status: Status | None = None,
        provenance: ProvenanceTag = Provenance.COMPUTED,
    ) -> "CheckRecord":
        if status is None:
            status = CheckStatus.PASS if passed else CheckStatus.FAIL
        return cls(
            check_id=check_id,
            params={key: str(value) for key, value in params.items()},
            lhs=str(lhs),
            rhs=str(rhs),
            passed=passed,
            provenance=provenance,
            status=status,
        )

    @property
    def sort_key(self) -> tuple[str, tuple[tuple[str, tuple[int, int, str]], ...]]:
        def natural(value: str) -> tuple[int, int, str]:
            if value.lstrip("-").isdigit():
                return (0, int(value), "")
            return (1, 0, value)

        return self.check_id, tuple((key, natural(value)) for key, value in self.params.items())


class ReportSummary(BaseSchema):
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped_cyclic: int = 0
    unsupported: int = 0

    @classmethod
    def of(cls, checks: list[CheckRecord]) -> "ReportSummary":
        counts = {status: 0 for status in ("pass", "fail", "skipped_cyclic", "unsupported")}
        for check in checks:
            counts[check.status] += 1
        return cls(
            total=len(checks),
            passed=counts["pass"],
            failed=counts["fail"],
            skipped_cyclic=counts["skipped_cyclic"],
            unsupported=counts["unsupported"],
        )


class VerificationReport(BaseSchema):
    suite: str
    checks: list[CheckRecord]
    summary: ReportSummary

    @model_validator(mode="after")
    def validate_summary(self) -> Self:
        s = self.summary
        if s.total != s.passed + s.failed + s.skipped_cyclic + s.unsupported:
            raise ValueError("summary counts do not add up")
        if s.total != len(self.checks):
            raise ValueError(f"summary total {s.total} != {len(self.checks)} checks")
        return self

    @classmethod
    def of(cls, suite: str, checks: list[CheckRecord]) -> "VerificationReport":
        ordered = sorted(checks, key=lambda c: c.sort_key)
        return cls(suite=suite, checks=ordered, summary=ReportSummary.of(ordered))
