"""검증 결과 모델 (regclasses / crosschar / defchar)"""

from fractions import Fraction
from typing import Literal

from pydantic import computed_field

from src.schemas.base import BaseSchema
from src.schemas.lie import GroupSpec

BoundSource = Literal[
    "table_formula", "exception_table", "zsigmondy_6_2_table", "supplementary_torus"
]


class RegBound(BaseSchema):
    """n_reg(T) 하한

    bound 는 내림한 류 개수, exact_bound 는 표 식의 유리수 값.
    exception_table 출처의 값은 공식 값일 뿐 보증되지 않는다 (certified=False).
    """

    spec: GroupSpec
    torus_index: int
    torus_order: int
    e: int
    bound: int
    exact_bound: Fraction
    source: BoundSource = "table_formula"
    certified: bool = True


class StarCheck(BaseSchema):
    """교차 표수 부등식 n_reg ≥ |G|_q |T|² / (|G|_{q'} |P|)

    lhs / rhs 는 분모를 없앤 정수형:
        lhs = num(n_reg) · |G|_{q'} · |P|,  rhs = den(n_reg) · |G|_q · |T|²
    """

    spec: GroupSpec
    p: int
    use_exact_sylow: bool
    torus_order: int
    nreg_bound: int
    exact_nreg: Fraction
    dl_degree: int  # |G : T|_{q'}
    sylow_order: int
    generic_sylow_lb: int
    lhs: int
    rhs: int
    required: Fraction  # |G|_q |T|² / (|G|_{q'} |P|)
    pass_generic: bool
    pass_exact: bool
    generic_sound: bool
    special: bool = False  # SL3(2), Sp4(2): 직접 확인 대상

    @computed_field
    @property
    def passed(self) -> bool:
        return self.pass_exact if self.use_exact_sylow else self.pass_generic


class ResidualPoint(BaseSchema):
    family: str
    n: int
    q: int
    p: int
    torus_order: int
    divides_first_torus: bool
    rescued: bool  # 정확한 |P| 로 재검사 시 통과
    closed_by_stored: bool = False

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.n, self.q, self.p)


class ResidualScan(BaseSchema):
    points: list[ResidualPoint]
    specials: list[str]
    skipped_cyclic: int
    coverage_gaps: list[str]

    @property
    def triples(self) -> list[tuple[int, int, int]]:
        return sorted({point.triple for point in self.points})

    @property
    def unrescued(self) -> list[tuple[int, int, int]]:
        return sorted({point.triple for point in self.points if not point.rescued})

    @property
    def open_points(self) -> list[tuple[int, int, int]]:
        """정확한 |P| 로도, 저장된 판정으로도 닫히지 않은 점"""
        return sorted(
            {p.triple for p in self.points if not p.rescued and not p.closed_by_stored}
        )


class DefCharCheck(BaseSchema):
    """정의 표수 부등식 하나 (lhs, rhs 는 양의 정수)"""

    check_id: str
    params: dict[str, str]
    lhs: int
    rhs: int
    strict: bool = True
    tight: bool = False  # 중간 추정과 등호
    note: str = ""
    metadata: dict[str, str] = {}

    @computed_field
    @property
    def passed(self) -> bool:
        return self.lhs > self.rhs if self.strict else self.lhs >= self.rhs
