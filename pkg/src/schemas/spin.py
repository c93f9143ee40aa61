"""대칭군의 2중 피복 스핀 지표 모델"""

from typing import Self

from pydantic import computed_field, model_validator

from src.schemas.base import BaseSchema


class StrictPartition(BaseSchema):
    parts: tuple[int, ...]

    @model_validator(mode="after")
    def validate_parts(self) -> Self:
        if not self.parts:
            raise ValueError("Strict partition needs at least one part")
        if self.parts[-1] < 1:
            raise ValueError(f"Parts must be positive, got {self.parts}")
        if any(a <= b for a, b in zip(self.parts, self.parts[1:], strict=False)):
            raise ValueError(f"Parts must be strictly decreasing, got {self.parts}")
        return self

    @classmethod
    def of(cls, *parts: int) -> "StrictPartition":
        return cls(parts=parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)


class SpinFamilyIndex(BaseSchema):
    """χ_l^1, χ_l^2 계열의 분할

    p1 = (4l-3, 4l-7, ..., 1) ⊢ l(2l-1),  p2 = (4l-1, 4l-5, ..., 3) ⊢ l(2l+1)
    """

    level: int

    @model_validator(mode="after")
    def validate_index(self) -> Self:
        if self.level < 1:
            raise ValueError(f"l must be positive, got {self.level}")
        return self

    @property
    def n1(self) -> int:
        return self.level * (2 * self.level - 1)

    @property
    def n2(self) -> int:
        return self.level * (2 * self.level + 1)

    @property
    def p1(self) -> StrictPartition:
        return StrictPartition(parts=tuple(range(4 * self.level - 3, 0, -4)))

    @property
    def p2(self) -> StrictPartition:
        return StrictPartition(parts=tuple(range(4 * self.level - 1, 2, -4)))

    def partition(self, family: int) -> StrictPartition:
        if family not in (1, 2):
            raise ValueError(f"family must be 1 or 2, got {family}")
        return self.p1 if family == 1 else self.p2


class CoverageReport(BaseSchema):
    """n 의 엄격 분할 중 최대 스핀 차수와 n!_{2'} 비교 (2-모듈러 기약성은 확인하지 않음)"""

    n: int
    partitions_searched: int
    max_degree: int
    witness: StrictPartition
    odd_factorial: int
    note: str = "degree-level only"

    @computed_field
    @property
    def passed(self) -> bool:
        return self.max_degree**2 >= self.odd_factorial
