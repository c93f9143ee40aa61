"""근계 / 가중치 모델 (기본 가중치 좌표)"""

from typing import Literal

from src.schemas.base import BaseSchema

RootType = Literal["A1", "A2", "A3", "C2"]

Matrix = tuple[tuple[int, ...], ...]


class Weight(BaseSchema):
    coords: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(coords=tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))


class RootSystemSpec(BaseSchema):
    """작은 근계 (A1, A2, A3, C2)

    cartan 의 i 번째 행 = 단순근 α_i 의 기본 가중치 좌표.
    weyl_group 의 각 원소 M 은 행벡터에 오른쪽에서 작용한다 (w ↦ w·M).
    """

    type: RootType
    cartan: Matrix
    weyl_group: tuple[Matrix, ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)
