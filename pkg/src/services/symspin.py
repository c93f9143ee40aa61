"""대칭군 2중 피복의 스핀 지표 차수

엄격 분할 λ ⊢ n (부분 m 개) 에 대해
    deg = 2^{⌊(n-m)/2⌋} · n! / ∏ λ_i! · ∏_{i<j} (λ_i - λ_j) / (λ_i + λ_j)
를 정수 분자 / 분모로 계산하고 나누어떨어짐을 확인한다.
"""

import logging
import math
from collections.abc import Iterator
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from src.constants import Limits
from src.schemas.spin import CoverageReport, SpinFamilyIndex, StrictPartition

logger = logging.getLogger(__name__)


class SpinDegreeError(Exception):
    pass


def _hook_numerator_denominator(parts: tuple[int, ...]) -> tuple[int, int]:
    n, m = sum(parts), len(parts)
    numerator = 2 ** ((n - m) // 2) * math.factorial(n)
    denominator = math.prod(math.factorial(x) for x in parts)
    for a, b in combinations(parts, 2):
        numerator *= a - b
        denominator *= a + b
    return numerator, denominator


@lru_cache(maxsize=4096)
def _spin_degree(parts: tuple[int, ...]) -> int:
    numerator, denominator = _hook_numerator_denominator(parts)
    degree, remainder = divmod(numerator, denominator)
    if remainder:
        raise SpinDegreeError(f"Non-integral spin degree for {parts}")
    return degree


def spin_degree(partition: StrictPartition) -> int:
    """막대 길이 공식 (hook length formula 의 스핀 판)

    Raises:
        SpinDegreeError: 결과가 정수가 아닌 경우
    """
    return _spin_degree(partition.parts)


def _strip_twos(x: int) -> int:
    return x >> ((x & -x).bit_length() - 1)


def odd_part_factorial(n: int) -> int:
    """n! 에서 2 의 인수를 모두 뺀 값 (n!_{2'})"""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _strip_twos(math.factorial(n))


def _odd_factorials(start: int, stop: int) -> Iterator[tuple[int, int]]:
    """start ≤ n < stop 에 대해 (n, n!_{2'}) 를 누적 곱으로 생성"""
    value = odd_part_factorial(start)
    for n in range(start, stop):
        if n > start:
            value *= _strip_twos(n)
        yield n, value


def strict_partitions(n: int, max_part: int | None = None) -> Iterator[StrictPartition]:
    """n 의 엄격 분할 (사전식 내림차순)"""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for parts in _strict_parts(n, n if max_part is None else max_part):
        yield StrictPartition(parts=parts)


def _strict_parts(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        # 나머지는 first - 1 이하의 서로 다른 수로 채워야 한다
        if first * (first + 1) // 2 < n:
            break
        for rest in _strict_parts(n - first, first - 1):
            yield (first, *rest)


def family_degree(level: int, family: int) -> int:
    """χ_l^1(1) 또는 χ_l^2(1)"""
    return spin_degree(SpinFamilyIndex(level=level).partition(family))


def ratio_identity_check(level: int, family: int) -> bool:
    """연속한 두 계열 차수의 비가 닫힌 꼴과 같은지

    family 1: χ_{l+1}/χ_l = 2^{4l-1} C(n_{l+1,1}, 4l+1) / C(4l-1, 2l)
    family 2: χ_{l+1}/χ_l = 2^{4l+1} C(n_{l+1,2}, 4l+3) / C(4l+1, 2l+1)
    """
    if level < 1:
        raise ValueError(f"l must be positive, got {level}")
    actual = Fraction(family_degree(level + 1, family), family_degree(level, family))
    k = 4 * level
    nxt = SpinFamilyIndex(level=level + 1)
    if family == 1:
        expected = Fraction(2 ** (k - 1) * math.comb(nxt.n1, k + 1), math.comb(k - 1, 2 * level))
    else:
        expected = Fraction(
            2 ** (k + 1) * math.comb(nxt.n2, k + 3), math.comb(k + 1, 2 * level + 1)
        )
    return actual == expected


def star_inequality(level: int) -> tuple[bool, bool]:
    """χ_l^1(1)² ≥ (n_{l,2} - 1)!_{2'} 와 χ_l^2(1)² ≥ (n_{l+1,1} - 1)!_{2'}"""
    index = SpinFamilyIndex(level=level)
    nxt = SpinFamilyIndex(level=level + 1)
    first = family_degree(level, 1) ** 2 >= odd_part_factorial(index.n2 - 1)
    second = family_degree(level, 2) ** 2 >= odd_part_factorial(nxt.n1 - 1)
    return first, second


def chaining_check(level: int) -> bool:
    """χ_l^1 이 n_{l,1} ≤ n < n_{l,2} 전체를, χ_l^2 가 n_{l,2} ≤ n < n_{l+1,1} 전체를 덮는지"""
    index = SpinFamilyIndex(level=level)
    next_start = SpinFamilyIndex(level=level + 1).n1
    square1 = family_degree(level, 1) ** 2
    square2 = family_degree(level, 2) ** 2
    for n, odd in _odd_factorials(index.n1, next_start):
        square = square1 if n < index.n2 else square2
        if square < odd:
            logger.info(f"l={level}: n={n} 에서 끊김")
            return False
    return True


def star_threshold(l_max: int) -> tuple[int | None, int | None]:
    """l ≤ l_max 범위에서 (*) 의 각 성분이 그 이후 계속 참이 되는 최소 l"""
    results = [star_inequality(level) for level in range(1, l_max + 1)]
    thresholds: list[int | None] = []
    for component in (0, 1):
        start: int | None = None
        for level, values in enumerate(results, start=1):
            if values[component]:
                start = start or level
            else:
                start = None
        thresholds.append(start)
    return thresholds[0], thresholds[1]


def coverage_check(n: int) -> CoverageReport:
    """n 의 엄격 분할 중 스핀 차수 최댓값의 제곱이 n!_{2'} 이상인지

    최댓값이 여러 개면 사전식 내림차순으로 먼저 나온 분할을 증인으로 쓴다.
    """
    if not Limits.SPIN_COVERAGE_N_MIN <= n <= Limits.SPIN_COVERAGE_N_MAX:
        raise ValueError(f"coverage_check requires 5 <= n < 120, got {n}")
    best: StrictPartition | None = None
    best_degree = 0
    searched = 0
    for partition in strict_partitions(n):
        searched += 1
        degree = spin_degree(partition)
        if degree > best_degree:
            best, best_degree = partition, degree
    assert best is not None
    return CoverageReport(
        n=n,
        partitions_searched=searched,
        max_degree=best_degree,
        witness=best,
        odd_factorial=odd_part_factorial(n),
    )
