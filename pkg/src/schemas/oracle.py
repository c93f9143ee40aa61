"""작은 행렬군 SL2(q) 전수 조사 모델"""

from pydantic import computed_field

from src.schemas.base import BaseSchema
from src.schemas.numbers import PrimePower

# (a, b, c, d) = [[a, b], [c, d]], 성분은 galois 정수 표현
Mat2 = tuple[int, int, int, int]


class FieldTables(BaseSchema):
    """GF(q) 의 덧셈/곱셈 표 (원소는 0..q-1 정수, 다항식 기저의 p 진 자리)"""

    q: int
    p: int
    degree: int
    irreducible_poly: str
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    inv: tuple[int, ...]  # inv[0] 은 사용하지 않음


class ClassInfo(BaseSchema):
    representative: Mat2
    size: int
    centralizer_order: int
    element_order: int


class SmallGroup(BaseSchema):
    q: PrimePower
    irreducible_poly: str
    elements: tuple[Mat2, ...]
    classes: tuple[ClassInfo, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


class TorusCount(BaseSchema):
    torus_order: int
    count: int
    bound: int

    @computed_field
    @property
    def passed(self) -> bool:
        return self.count >= self.bound


class OracleComparison(BaseSchema):
    """전수 조사 결과와 공식 / 표 하한의 비교"""

    q: int
    group_order: int
    formula_order: int
    p_prime_part: int
    regular_classes: int
    torus_counts: list[TorusCount] = []
    class_equation: bool
    centralizer_duality: bool
    note: str = ""

    @computed_field
    @property
    def passed(self) -> bool:
        return (
            self.group_order == self.formula_order
            and self.p_prime_part == self.q * self.q - 1
            and self.class_equation
            and self.centralizer_duality
            and all(t.passed for t in self.torus_counts)
        )
