"""Lie 형 유한군 레지스트리 모델

GroupSpec: 군 (family, rank, q)
CycloProduct: 군 위수 q^N · ∏ Φ_d(q)^a(d)
TorusEntry: 극대 토러스 표의 한 행 (rank, q 에서 평가된 값)
"""

from fractions import Fraction
from typing import Literal, Self

from pydantic import model_validator

from src.constants import Families
from src.schemas.base import BaseSchema
from src.schemas.numbers import PrimePower

Family = Literal[
    "A", "2A", "B", "C", "D", "2D", "G2", "3D4", "F4", "E6", "2E6", "E7", "E8", "2B2", "2G2", "2F4"
]

# 예외형은 rank가 family로 결정됨
IMPLIED_RANK: dict[str, int] = {
    "G2": 2,
    "3D4": 4,
    "F4": 4,
    "E6": 6,
    "2E6": 6,
    "E7": 7,
    "E8": 8,
    "2B2": 2,
    "2G2": 2,
    "2F4": 4,
}

MIN_RANK: dict[str, int] = {"A": 2, "2A": 3, "B": 2, "C": 2, "D": 4, "2D": 4}


class GroupSpec(BaseSchema):
    """단순연결형 Lie 형 유한군

    rank는 표에서 쓰는 매개변수 n (A_{n-1} 은 n 으로 저장).
    Suzuki/Ree 군의 q 는 Q = p^{2f+1} 이다.
    """

    family: Family
    rank: int = 0
    q: PrimePower

    @model_validator(mode="after")
    def validate_family_rank(self) -> Self:
        if self.family in MIN_RANK:
            if self.rank < MIN_RANK[self.family]:
                raise ValueError(
                    f"{self.family} requires rank >= {MIN_RANK[self.family]}, got {self.rank}"
                )
        elif self.rank != IMPLIED_RANK[self.family]:
            raise ValueError(f"{self.family} has fixed rank {IMPLIED_RANK[self.family]}")

        if self.family in ("2B2", "2F4") and (self.q.p != 2 or self.q.f % 2 == 0):
            raise ValueError(f"{self.family} requires Q = 2^(2f+1), got {self.q.value}")
        if self.family == "2B2" and self.q.value < 8:
            raise ValueError("2B2 requires Q >= 8")
        if self.family == "2G2" and (self.q.p != 3 or self.q.f % 2 == 0 or self.q.value < 27):
            raise ValueError(f"2G2 requires Q = 3^(2f+1) >= 27, got {self.q.value}")
        return self

    @classmethod
    def of(cls, family: Family, rank: int | None = None, *, q: int) -> "GroupSpec":
        """정수 q 로 GroupSpec 생성 (테스트/스캔용 단축 생성자)"""
        return cls(
            family=family,
            rank=rank or IMPLIED_RANK.get(family, 0),
            q=PrimePower.from_int(q),
        )

    @property
    def is_classical(self) -> bool:
        return self.family in Families.CLASSICAL

    @property
    def lie_rank(self) -> int:
        """대수군의 Lie rank (A_{n-1}, 2A_{n-1} 은 n-1)"""
        if self.family in ("A", "2A"):
            return self.rank - 1
        return self.rank

    @property
    def label(self) -> str:
        q = self.q.value
        match self.family:
            case "A":
                return f"SL{self.rank}({q})"
            case "2A":
                return f"SU{self.rank}({q})"
            case "C":
                return f"Sp{2 * self.rank}({q})"
            case "B" | "D" | "2D":
                return f"{self.family}{self.rank}({q})"
            case _:
                return f"{self.family}({q})"

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (Families.ALL.index(self.family), self.rank, self.q.value)


class CycloProduct(BaseSchema):
    """q^N · ∏ Φ_d(q)^a(d) 형태의 위수 표현

    twisted_factors 는 Suzuki/Ree 토러스의 무리수 인수 이름 (phi8pp, phi12pp, phi24pp).
    """

    q_exponent: int
    factors: dict[int, int]
    twisted_factors: tuple[str, ...] = ()


class TorusEntry(BaseSchema):
    """토러스 표의 한 행 (rank, q 에서 평가됨)"""

    condition: str  # 행이 적용되는 조건 (예: "n odd")
    order_expr: str  # 표에 적힌 위수 식
    order: int
    e: int  # Zsigmondy 지수 (없으면 0)
    normalizer_index: int
    bound_expr: str
    nreg_bound: Fraction
    noncyclic_image: bool = False  # D_n 의 처음 두 토러스
    supplementary: bool = False
