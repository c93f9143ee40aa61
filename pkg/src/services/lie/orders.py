"""군 위수 공식, 중심 위수, Weyl 군 위수, Sylow 순환성

위수는 차수(degree) 목록에서 q^N · ∏ Φ_d(q)^a(d) 로 조립한다.
Suzuki/Ree 군은 Q 를 변수로 하는 다항식이다.
"""

import math
from collections import Counter
from functools import lru_cache

from sympy import divisors

from src.constants import WeylOrders
from src.schemas.lie import CycloProduct, GroupSpec
from src.services.exactnum import cyclo_eval, mult_order, p_part


class UnsupportedGroupError(Exception):
    pass


# 예외형 군의 불변 차수 (홀수 차수는 2E6 에서 q^d + 1 로 바뀜)
EXCEPTIONAL_DEGREES: dict[str, tuple[int, ...]] = {
    "G2": (2, 6),
    "F4": (2, 6, 8, 12),
    "E6": (2, 5, 6, 8, 9, 12),
    "2E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}

# q^N 의 N (예외형)
EXCEPTIONAL_POSITIVE_ROOTS: dict[str, int] = {
    "G2": 6,
    "3D4": 12,
    "F4": 24,
    "E6": 36,
    "2E6": 36,
    "E7": 63,
    "E8": 120,
    "2B2": 2,
    "2G2": 3,
    "2F4": 12,
}

# 고정된 원분 인수 목록 (Suzuki/Ree 는 Q 기준)
FIXED_FACTORS: dict[str, dict[int, int]] = {
    "3D4": {1: 2, 2: 2, 3: 2, 6: 2, 12: 1},
    "2B2": {1: 1, 4: 1},
    "2G2": {1: 1, 2: 1, 6: 1},
    "2F4": {1: 2, 2: 2, 4: 2, 6: 1, 12: 1},
}


def _add_q_minus_1(factors: Counter[int], m: int) -> None:
    """q^m - 1 = ∏_{d|m} Φ_d"""
    for d in divisors(m):
        factors[int(d)] += 1


def _add_q_plus_1(factors: Counter[int], m: int) -> None:
    """q^m + 1 = ∏_{d|2m, d∤m} Φ_d"""
    for d in divisors(2 * m):
        if m % d != 0:
            factors[int(d)] += 1


@lru_cache(maxsize=1024)
def _order_data(family: str, n: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    factors: Counter[int] = Counter()
    match family:
        case "A":
            positive_roots = n * (n - 1) // 2
            for i in range(2, n + 1):
                _add_q_minus_1(factors, i)
        case "2A":
            positive_roots = n * (n - 1) // 2
            for i in range(2, n + 1):
                if i % 2:
                    _add_q_plus_1(factors, i)
                else:
                    _add_q_minus_1(factors, i)
        case "B" | "C":
            positive_roots = n * n
            for i in range(1, n + 1):
                _add_q_minus_1(factors, 2 * i)
        case "D" | "2D":
            positive_roots = n * (n - 1)
            if family == "D":
                _add_q_minus_1(factors, n)
            else:
                _add_q_plus_1(factors, n)
            for i in range(1, n):
                _add_q_minus_1(factors, 2 * i)
        case "G2" | "F4" | "E6" | "E7" | "E8":
            positive_roots = EXCEPTIONAL_POSITIVE_ROOTS[family]
            for degree in EXCEPTIONAL_DEGREES[family]:
                _add_q_minus_1(factors, degree)
        case "2E6":
            positive_roots = EXCEPTIONAL_POSITIVE_ROOTS[family]
            for degree in EXCEPTIONAL_DEGREES[family]:
                if degree % 2:
                    _add_q_plus_1(factors, degree)
                else:
                    _add_q_minus_1(factors, degree)
        case _:
            positive_roots = EXCEPTIONAL_POSITIVE_ROOTS[family]
            factors.update(FIXED_FACTORS[family])
    return positive_roots, tuple(sorted(factors.items()))


def order_data(spec: GroupSpec) -> CycloProduct:
    """|G^F| 의 원분 곱 표현"""
    positive_roots, factors = _order_data(spec.family, spec.rank)
    return CycloProduct(q_exponent=positive_roots, factors=dict(factors))


def positive_roots(spec: GroupSpec) -> int:
    return _order_data(spec.family, spec.rank)[0]


@lru_cache(maxsize=4096)
def order_q_prime_part(spec: GroupSpec) -> int:
    """|G|_{p'} (p = 정의 표수) = ∏ Φ_d(q)^a(d)"""
    _, factors = _order_data(spec.family, spec.rank)
    q = spec.q.value
    return math.prod(cyclo_eval(d, q) ** a for d, a in factors)


@lru_cache(maxsize=4096)
def order(spec: GroupSpec) -> int:
    """단순연결형 |G^F|"""
    return spec.q.value ** positive_roots(spec) * order_q_prime_part(spec)


def center_order(spec: GroupSpec) -> int:
    """|Z(G_sc)|"""
    q, n = spec.q.value, spec.rank
    match spec.family:
        case "A":
            return math.gcd(n, q - 1)
        case "2A":
            return math.gcd(n, q + 1)
        case "B" | "C":
            return math.gcd(2, q - 1)
        case "D":
            return math.gcd(4, q**n - 1)
        case "2D":
            return math.gcd(4, q**n + 1)
        case "E6":
            return math.gcd(3, q - 1)
        case "2E6":
            return math.gcd(3, q + 1)
        case "E7":
            return math.gcd(2, q - 1)
        case _:
            return 1


def weyl_order(spec: GroupSpec) -> int:
    """기저 (untwisted) 근계의 Weyl 군 위수"""
    n = spec.rank
    match spec.family:
        case "A" | "2A":
            return math.factorial(n)
        case "B" | "C":
            return 2**n * math.factorial(n)
        case "D" | "2D" | "3D4":
            return 2 ** (n - 1) * math.factorial(n)
        case "G2" | "2G2":
            return WeylOrders.G2
        case "2B2":
            return 8
        case "F4" | "2F4":
            return WeylOrders.F4
        case "E6" | "2E6":
            return WeylOrders.E6
        case "E7":
            return WeylOrders.E7
        case _:
            return WeylOrders.E8


def sylow_cyclic(spec: GroupSpec, p: int) -> bool:
    """Sylow p-부분군의 순환 여부 (p 는 비정의 표수)

    d = ord_q(p) 일 때 |G|_p 가 Φ_d(q) 하나의 p-part 와 같으면 순환.
    |G|_p = 1 인 경우도 순환으로 본다.

    Raises:
        ValueError: p 가 정의 표수인 경우
    """
    if p == spec.q.p:
        raise ValueError(f"p = {p} is the defining characteristic of {spec.label}")
    sylow = p_part(order(spec), p)
    if sylow == 1:
        return True
    q = spec.q.value
    return sylow == p_part(cyclo_eval(mult_order(q, p), q), p)
