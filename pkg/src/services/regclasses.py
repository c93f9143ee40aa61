"""정칙 반단순 류 개수의 하한과 "정칙 류 두 개" 판정

- 여섯 예외 군과 (e, q) = (6, 2) 표는 알려진 지표표에서 옮긴 값으로 저장한다.
- 표 식은 정확한 유리수로 평가하고, 류 개수로 보고할 때만 내림한다.
"""

import logging
import math
from fractions import Fraction
from typing import cast

from src.constants import Families
from src.schemas.checks import BoundSource, RegBound
from src.schemas.lie import IMPLIED_RANK, MIN_RANK, Family, GroupSpec, TorusEntry
from src.services.exactnum import prime_powers
from src.services.lie import (
    UnsupportedGroupError,
    center_order,
    supplementary_entries,
    torus_entries,
)

logger = logging.getLogger(__name__)

GroupKey = tuple[str, int, int]

# SU4(2), Sp4(2), Sp6(2), O8+(2), O8-(2), SU3(3) (q 짝수에서 B_n = C_n)
EXCEPTION_GROUPS: frozenset[GroupKey] = frozenset(
    {
        ("2A", 4, 2),
        ("B", 2, 2),
        ("C", 2, 2),
        ("B", 3, 2),
        ("C", 3, 2),
        ("D", 4, 2),
        ("2D", 4, 2),
        ("2A", 3, 3),
    }
)

# (e, q) = (6, 2): (family, rank) -> (|T|, n_reg(T))
ZSIGMONDY_6_2_TABLE: dict[tuple[str, int], tuple[int, int]] = {
    ("A", 6): (63, 9),
    ("A", 7): (63, 9),
    ("2A", 4): (9, 2),
    ("2A", 6): (21, 3),
    ("2A", 7): (63, 9),
    ("C", 3): (9, 1),
    ("B", 3): (9, 1),
    ("D", 4): (27, 3),
    ("2D", 4): (9, 1),
}

# "정칙 류 두 개" 판정을 지표표에서 옮겨온 군 (모두 참), 2F4(2) 는 Tits 군
STORED_COROLLARY_VERDICTS: dict[GroupKey, bool] = {
    **dict.fromkeys(EXCEPTION_GROUPS, True),
    ("2F4", 4, 2): True,
}

# 유사단순군이 아닌 경우
NON_QUASI_SIMPLE: frozenset[GroupKey] = frozenset(
    {("A", 2, 2), ("A", 2, 3), ("2A", 3, 2), ("G2", 2, 2)}
)


def group_key(spec: GroupSpec) -> GroupKey:
    return (spec.family, spec.rank, spec.q.value)


def _formula_bound(
    spec: GroupSpec,
    entry: TorusEntry,
    torus_index: int,
    *,
    source: BoundSource = "table_formula",
    certified: bool = True,
) -> RegBound:
    exact = max(entry.nreg_bound, Fraction(0))
    return RegBound(
        spec=spec,
        torus_index=torus_index,
        torus_order=entry.order,
        e=entry.e,
        bound=math.floor(exact),
        exact_bound=exact,
        source="supplementary_torus" if entry.supplementary else source,
        certified=certified,
    )


def _torus_index(spec: GroupSpec, entry: TorusEntry) -> int:
    entries = torus_entries(spec)
    return entries.index(entry) if entry in entries else len(entries)


def nreg_lower_bound(spec: GroupSpec, entry: TorusEntry) -> RegBound:
    """토러스 T 와 만나는 정칙 반단순 류 개수의 하한

    Raises:
        UnsupportedGroupError: 여섯 예외 군 중 저장된 값이 없는 토러스
    """
    index = _torus_index(spec, entry)
    stored = ZSIGMONDY_6_2_TABLE.get((spec.family, spec.rank))
    if spec.q.value == 2 and entry.e == 6 and stored is not None:
        torus_order, count = stored
        if torus_order != entry.order:
            raise UnsupportedGroupError(
                f"{spec.label}: stored |T| = {torus_order} differs from table {entry.order}"
            )
        return RegBound(
            spec=spec,
            torus_index=index,
            torus_order=torus_order,
            e=6,
            bound=count,
            exact_bound=Fraction(count),
            source="zsigmondy_6_2_table",
        )

    if group_key(spec) in EXCEPTION_GROUPS:
        raise UnsupportedGroupError(f"{spec.label} is covered by its known character table")
    return _formula_bound(spec, entry, index)


def routed_bound(spec: GroupSpec, entry: TorusEntry) -> RegBound:
    """예외 군은 공식 값을 exception_table 출처(미보증)로 돌려준다"""
    try:
        return nreg_lower_bound(spec, entry)
    except UnsupportedGroupError:
        if group_key(spec) not in EXCEPTION_GROUPS:
            raise
        return _formula_bound(
            spec, entry, _torus_index(spec, entry), source="exception_table", certified=False
        )


def corollary_margin(spec: GroupSpec) -> tuple[int, int]:
    """(보증된 값, 필요한 값)

    고전형: 두 토러스 하한의 올림 중 작은 값 vs 1
    예외형: 토러스 하한의 올림 중 가장 큰 값 vs |Z| + 1
    """
    bounds = [routed_bound(spec, entry) for entry in torus_entries(spec)]
    if spec.is_classical:
        return min(math.ceil(b.exact_bound) for b in bounds), 1
    bounds += [_formula_bound(spec, entry, len(bounds)) for entry in supplementary_entries(spec)]
    return max(math.ceil(b.exact_bound) for b in bounds), center_order(spec) + 1


def two_regular_classes_check(spec: GroupSpec) -> bool:
    """중심을 법으로 서로 다른 정칙 반단순 류가 두 개 이상인지

    Raises:
        ValueError: 유사단순군이 아닌 경우 (SL2(2), SL2(3), SU3(2), G2(2))
    """
    key = group_key(spec)
    if key in NON_QUASI_SIMPLE:
        raise ValueError(f"{spec.label} is not quasi-simple")
    if key in STORED_COROLLARY_VERDICTS:
        return STORED_COROLLARY_VERDICTS[key]
    certified, required = corollary_margin(spec)
    return certified >= required


def grid_specs(rank_max: int, q_max: int) -> list[GroupSpec]:
    """격자 위의 모든 유효한 GroupSpec (family, rank, q 순)"""
    specs: list[GroupSpec] = []
    qs = prime_powers(q_max)
    for family in Families.ALL:
        if family in MIN_RANK:
            ranks = range(MIN_RANK[family], rank_max + 1)
        else:
            ranks = range(IMPLIED_RANK[family], IMPLIED_RANK[family] + 1)
            if IMPLIED_RANK[family] > rank_max:
                continue
        for rank in ranks:
            for q in qs:
                try:
                    specs.append(GroupSpec.of(cast(Family, family), rank, q=q))
                except ValueError:
                    continue
    return specs


def scan_all(rank_max: int, q_max: int) -> list[RegBound]:
    """격자 전체의 하한 (family, rank, q, torus 순서)"""
    if rank_max < 2 or q_max < 2:
        raise ValueError(f"scan_all requires rank_max, q_max >= 2, got ({rank_max}, {q_max})")
    results: list[RegBound] = []
    for spec in grid_specs(rank_max, q_max):
        try:
            entries = torus_entries(spec)
        except UnsupportedGroupError as e:
            logger.info(f"표 밖의 군 건너뜀: {spec.label} ({e})")
            continue
        results.extend(routed_bound(spec, entry) for entry in entries)
    return results
