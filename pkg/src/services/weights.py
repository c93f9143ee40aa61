"""작은 근계 엔진: Weyl 궤도, 부분지배 가중치, Premet 차원 하한, 중심 지표

Premet 하한은 λ 에 부분지배인 모든 지배 가중치 μ 의 Weyl 궤도 크기 합이다.
"""

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from sympy import Matrix

from src.schemas.weights import Matrix as IntMatrix
from src.schemas.weights import RootSystemSpec, RootType, Weight

CARTAN: dict[str, IntMatrix] = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
    "C2": ((2, -2), (-1, 2)),  # 두 번째 좌표가 자연 가군
}

WEYL_ORDERS: dict[str, int] = {"A1": 2, "A2": 6, "A3": 24, "C2": 8}

# 중심 지표: (계수, 법)
CENTRAL_CHARACTER: dict[str, tuple[tuple[int, ...], int]] = {
    "A2": ((1, 2), 3),
    "A3": ((1, 2, 3), 4),
    "C2": ((0, 1), 2),
}


def _simple_reflections(cartan: IntMatrix) -> list[np.ndarray]:
    rank = len(cartan)
    reflections: list[np.ndarray] = []
    for i in range(rank):
        s = np.eye(rank, dtype=np.int64)
        s[i, :] -= np.array(cartan[i], dtype=np.int64)
        reflections.append(s)
    return reflections


def _to_matrix(m: np.ndarray) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in m)


@lru_cache(maxsize=None)
def root_system(rs_type: RootType) -> RootSystemSpec:
    """단순 반사로 생성한 Weyl 군 원소 목록을 포함한 근계"""
    cartan = CARTAN[rs_type]
    generators = _simple_reflections(cartan)
    identity = np.eye(len(cartan), dtype=np.int64)
    elements = {_to_matrix(identity): identity}
    frontier = [identity]
    while frontier:
        nxt: list[np.ndarray] = []
        for m in frontier:
            for s in generators:
                product = m @ s
                key = _to_matrix(product)
                if key not in elements:
                    elements[key] = product
                    nxt.append(product)
        frontier = nxt

    if len(elements) != WEYL_ORDERS[rs_type]:
        raise RuntimeError(f"Weyl group of {rs_type} has {len(elements)} elements")
    return RootSystemSpec(type=rs_type, cartan=cartan, weyl_group=tuple(sorted(elements)))


def _require_dominant(w: Weight) -> None:
    if not w.is_dominant:
        raise ValueError(f"Weight {w.coords} is not dominant")


@lru_cache(maxsize=None)
def _orbit_size(rs_type: RootType, coords: tuple[int, ...]) -> int:
    rs = root_system(rs_type)
    group = np.array(rs.weyl_group, dtype=np.int64)
    images = np.einsum("j,gjk->gk", np.array(coords, dtype=np.int64), group)
    return len({tuple(row) for row in images.tolist()})


def weyl_orbit_size(rs: RootSystemSpec, w: Weight) -> int:
    """|W| / |Stab_W(w)| (궤도를 직접 생성해서 셈)

    Raises:
        ValueError: w 가 지배 가중치가 아닌 경우
    """
    _require_dominant(w)
    return _orbit_size(rs.type, w.coords)


def _pattern_orbit_size(rs_type: RootType, coords: tuple[int, ...]) -> int:
    # 지배 가중치의 안정자는 0 좌표 집합에만 의존
    return _orbit_size(rs_type, tuple(1 if c else 0 for c in coords))


@lru_cache(maxsize=None)
def _inverse_cartan(rs_type: RootType) -> tuple[tuple[Fraction, ...], ...]:
    inverse = Matrix(CARTAN[rs_type]).inv()
    return tuple(
        tuple(Fraction(int(x.p), int(x.q)) for x in inverse.row(i))
        for i in range(inverse.rows)
    )


def root_coordinates(rs: RootSystemSpec, w: Weight) -> tuple[Fraction, ...]:
    """w = Σ c_i α_i 의 계수 c"""
    inverse = _inverse_cartan(rs.type)
    return tuple(
        sum((w.coords[j] * inverse[j][i] for j in range(rs.rank)), Fraction(0))
        for i in range(rs.rank)
    )


def _subtract(lam: tuple[int, ...], cartan: IntMatrix, c: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(
        lam[j] - sum(c[i] * cartan[i][j] for i in range(len(c))) for j in range(len(lam))
    )


def subdominant_weights(rs: RootSystemSpec, lam: Weight) -> list[tuple[Weight, int]]:
    """λ - μ 가 단순근의 음이 아닌 정수 결합인 지배 가중치 μ 와 궤도 크기

    높이 (계수 합) 오름차순이므로 λ 자신이 맨 앞이다.
    """
    _require_dominant(lam)
    limits = [math.floor(x) for x in root_coordinates(rs, lam)]
    found: list[tuple[int, tuple[int, ...], tuple[int, ...]]] = []
    for c in itertools.product(*(range(b + 1) for b in limits)):
        mu = _subtract(lam.coords, rs.cartan, c)
        if all(x >= 0 for x in mu):
            found.append((sum(c), tuple(-x for x in mu), mu))
    found.sort()
    return [(Weight(coords=mu), _orbit_size(rs.type, mu)) for _, _, mu in found]


@lru_cache(maxsize=65536)
def _premet(rs_type: RootType, coords: tuple[int, ...]) -> int:
    rs = root_system(rs_type)
    cartan = rs.cartan
    rank = rs.rank
    limits = [math.floor(x) for x in root_coordinates(rs, Weight(coords=coords))]
    last = cartan[rank - 1]
    full_orbit_cache: dict[tuple[int, ...], int] = {}
    total = 0

    # 마지막 계수를 제외한 접두부마다, 마지막 계수의 허용 구간을 한 번에 더한다
    for prefix in itertools.product(*(range(b + 1) for b in limits[:-1])):
        base = _subtract(coords, cartan[:-1], prefix)
        lo, hi = 0, limits[-1]
        for j in range(rank):
            if last[j] > 0:
                hi = min(hi, base[j] // last[j])
            elif last[j] < 0:
                lo = max(lo, -(base[j] // -last[j]) if base[j] < 0 else 0)
            elif base[j] < 0:
                hi = -1
        if lo > hi:
            continue

        special = {
            base[j] // last[j]
            for j in range(rank)
            if last[j] != 0 and base[j] % last[j] == 0 and lo <= base[j] // last[j] <= hi
        }
        for c in special:
            mu = tuple(base[j] - c * last[j] for j in range(rank))
            total += _pattern_orbit_size(rs_type, mu)

        generic_count = hi - lo + 1 - len(special)
        if generic_count:
            # 특수점 밖에서 0 이 되는 좌표는 last[j] == 0 이고 base[j] == 0 인 것뿐
            pattern = tuple(0 if last[j] == 0 and base[j] == 0 else 1 for j in range(rank))
            if pattern not in full_orbit_cache:
                full_orbit_cache[pattern] = _orbit_size(rs_type, pattern)
            total += generic_count * full_orbit_cache[pattern]
    return total


def premet_bound(rs: RootSystemSpec, lam: Weight) -> int:
    """dim L(λ) 의 하한: 부분지배 가중치 궤도 크기의 합 (p 와 무관)"""
    _require_dominant(lam)
    return _premet(rs.type, lam.coords)


def central_character(family: RootType, lam: Weight, q_sign: int = 1) -> int:
    """λ 를 단순연결군의 중심에 제한한 값 (Z/3, Z/4, Z/2 의 원소)

    q_sign 은 분할형(+1) / 유니터리형(-1) 을 구분할 뿐 잉여류는 같다.

    Raises:
        ValueError: 지원하지 않는 근계 또는 q_sign
    """
    _require_dominant(lam)
    if q_sign not in (1, -1):
        raise ValueError(f"q_sign must be +1 or -1, got {q_sign}")
    if family not in CENTRAL_CHARACTER:
        raise ValueError(f"Unsupported family for central character: {family!r}")
    coefficients, modulus = CENTRAL_CHARACTER[family]
    return sum(a * m for a, m in zip(coefficients, lam.coords, strict=True)) % modulus
