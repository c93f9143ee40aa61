"""SL2(q) 전수 조사: 켤레류, 중심화군 위수, 정칙 반단순 류

켤레류는 생성원 (상/하 삼각 단위 행렬, t 는 GF(q) 의 F_p-기저) 에 의한
켤레 작용의 궤도를 union-find 로 합쳐 구한다.
"""

import logging
import math
from collections import defaultdict

from src.constants import Limits
from src.schemas.lie import GroupSpec
from src.schemas.numbers import PrimePower
from src.schemas.oracle import (
    ClassInfo,
    FieldTables,
    Mat2,
    OracleComparison,
    SmallGroup,
    TorusCount,
)
from src.services.exactnum import p_part_split
from src.services.lie import order, torus_entries
from src.services.oracle.field import field_tables

logger = logging.getLogger(__name__)

IDENTITY: Mat2 = (1, 0, 0, 1)


class OracleSizeError(Exception):
    pass


def _mul(f: FieldTables, x: Mat2, y: Mat2) -> Mat2:
    add, mul = f.add, f.mul
    a, b, c, d = x
    e, g, h, k = y
    return (
        add[mul[a][e]][mul[b][h]],
        add[mul[a][g]][mul[b][k]],
        add[mul[c][e]][mul[d][h]],
        add[mul[c][g]][mul[d][k]],
    )


def _inverse(f: FieldTables, x: Mat2) -> Mat2:
    # 행렬식 1
    a, b, c, d = x
    return (d, f.neg[b], f.neg[c], a)


def _element_order(f: FieldTables, x: Mat2) -> int:
    power, n = x, 1
    while power != IDENTITY:
        power = _mul(f, power, x)
        n += 1
    return n


def _centralizer_order(f: FieldTables, elements: list[Mat2], x: Mat2) -> int:
    return sum(1 for y in elements if _mul(f, x, y) == _mul(f, y, x))


def _generators(f: FieldTables) -> list[Mat2]:
    basis = [f.p**k for k in range(f.degree)]
    return [(1, t, 0, 1) for t in basis] + [(1, 0, t, 1) for t in basis]


class _DisjointSet:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def enumerate_sl2(q: PrimePower | int) -> SmallGroup:
    """SL2(q) 의 모든 원소와 켤레류

    Raises:
        OracleSizeError: q > 11
    """
    prime_power = q if isinstance(q, PrimePower) else PrimePower.from_int(q)
    if prime_power.value > Limits.ORACLE_Q_MAX:
        raise OracleSizeError(
            f"SL2({prime_power.value}) exceeds the oracle limit q <= {Limits.ORACLE_Q_MAX}"
        )
    f = field_tables(prime_power.value)
    size = prime_power.value
    elements: list[Mat2] = [
        (a, b, c, d)
        for a in range(size)
        for b in range(size)
        for c in range(size)
        for d in range(size)
        if f.add[f.mul[a][d]][f.neg[f.mul[b][c]]] == 1
    ]
    index = {x: i for i, x in enumerate(elements)}

    classes = _DisjointSet(len(elements))
    for h in _generators(f):
        h_inv = _inverse(f, h)
        for i, x in enumerate(elements):
            classes.union(i, index[_mul(f, _mul(f, h, x), h_inv)])

    members: defaultdict[int, list[int]] = defaultdict(list)
    for i in range(len(elements)):
        members[classes.find(i)].append(i)

    group_order = len(elements)
    infos = tuple(
        ClassInfo(
            representative=elements[root],
            size=len(group),
            centralizer_order=_centralizer_order(f, elements, elements[root]),
            element_order=_element_order(f, elements[root]),
        )
        for root, group in sorted(members.items())
    )
    logger.info(f"SL2({size}): {group_order}개 원소, {len(infos)}개 켤레류")
    return SmallGroup(
        q=prime_power,
        irreducible_poly=f.irreducible_poly,
        elements=tuple(elements),
        classes=infos,
    )


def regular_ss_classes(g: SmallGroup) -> int:
    """중심화군 위수가 p 와 서로소인 켤레류의 개수"""
    return sum(1 for c in g.classes if math.gcd(c.centralizer_order, g.q.p) == 1)


def compare_with_tables(g: SmallGroup) -> OracleComparison:
    """토러스 (q+1, q-1) 별 정칙 류 개수를 표 하한과, 군 위수를 공식과 비교

    q < 4 (SL2(2), SL2(3)) 는 유사단순군이 아니므로 산술만 비교한다.
    """
    q = g.q.value
    spec = GroupSpec.of("A", 2, q=q)
    formula = order(spec)
    _, p_prime = p_part_split(g.order, g.q.p)

    torus_counts: list[TorusCount] = []
    note = ""
    if q >= 4:
        regular = [c for c in g.classes if math.gcd(c.centralizer_order, g.q.p) == 1]
        for entry in torus_entries(spec):
            count = sum(1 for c in regular if c.centralizer_order == entry.order)
            torus_counts.append(
                TorusCount(torus_order=entry.order, count=count, bound=math.floor(entry.nreg_bound))
            )
    else:
        note = "not quasi-simple: arithmetic only"

    return OracleComparison(
        q=q,
        group_order=g.order,
        formula_order=formula,
        p_prime_part=p_prime,
        regular_classes=regular_ss_classes(g),
        torus_counts=torus_counts,
        class_equation=sum(c.size for c in g.classes) == g.order,
        centralizer_duality=all(c.size * c.centralizer_order == g.order for c in g.classes),
        note=note,
    )
