"""정수 산술: p-part 분리, 곱셈 위수, 원분다항식 값, Zsigmondy 소수, 소인수분해

모든 함수는 순수 함수이며 결정적이다 (rho 단계는 고정 seed 사용).
"""

import logging
from collections import Counter
from functools import lru_cache

from sympy import Poly, Symbol, cyclotomic_poly
from sympy.ntheory import isprime, multiplicity, n_order, pollard_rho, primerange
from sympy.ntheory.ecm import ecm

from src.config import get_settings
from src.constants import Limits
from src.schemas.numbers import NatFactored, PrimePower

logger = logging.getLogger(__name__)

_X = Symbol("x")


class FactorizationError(Exception):
    pass


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise ValueError(f"p must be prime, got {p}")


def p_part_split(n: int, p: int) -> tuple[int, int]:
    """n = n_p · n_{p'} 분리

    Returns:
        (p_part, p_prime_part)

    Raises:
        ValueError: n < 1 이거나 p 가 소수가 아닌 경우
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    _require_prime(p)
    part = p ** int(multiplicity(p, n))
    return part, n // part


def p_part(n: int, p: int) -> int:
    return p_part_split(n, p)[0]


def mult_order(q: int, p: int) -> int:
    """q mod p 의 곱셈 위수 (q^d ≡ 1 인 최소 d)"""
    _require_prime(p)
    if q % p == 0:
        raise ValueError(f"{p} divides {q}")
    return int(n_order(q, p))


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> Poly:
    return Poly(cyclotomic_poly(d, _X), _X)


@lru_cache(maxsize=8192)
def cyclo_eval(d: int, q: int) -> int:
    """Φ_d(q)"""
    if d < 1 or q < 2:
        raise ValueError(f"cyclo_eval requires d >= 1 and q >= 2, got ({d}, {q})")
    return int(_cyclotomic(d).eval(q))


def _ecm_divisor(m: int, curves: int, seed: int) -> int | None:
    if curves <= 0:
        return None
    try:
        found = ecm(m, max_curve=curves, seed=seed)
    except ValueError:
        return None
    return int(min(found))


@lru_cache(maxsize=4096)
def _factorize(
    n: int, effort_cap: int, trial_bound: int, seed: int, ecm_curves: int
) -> NatFactored:
    factors: Counter[int] = Counter()
    rest = n
    for prime in primerange(2, trial_bound):
        if prime * prime > rest:
            break
        while rest % prime == 0:
            factors[prime] += 1
            rest //= prime

    residue = 1
    pending = [rest] if rest > 1 else []
    while pending:
        m = pending.pop()
        if isprime(m):
            factors[m] += 1
            continue
        divisor = pollard_rho(m, seed=seed, max_steps=effort_cap)
        if divisor is None:
            divisor = _ecm_divisor(m, ecm_curves, seed)
        if divisor is None:
            logger.warning(f"인수분해 미완료: {m} (effort_cap={effort_cap})")
            residue *= m
            continue
        divisor = int(divisor)
        pending.extend((divisor, m // divisor))

    return NatFactored(value=n, factors=dict(sorted(factors.items())), residue=residue)


def factorize(n: int, effort_cap: int | None = None) -> NatFactored:
    """시행 나눗셈 + 고정 seed Pollard rho, rho 가 한도 안에 실패하면 ECM

    미분해 인수는 residue 로 남긴다 (예외 없음).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    settings = get_settings()
    cap = settings.factor_effort_cap if effort_cap is None else effort_cap
    return _factorize(
        n,
        cap,
        settings.factor_trial_bound,
        settings.factor_rho_seed,
        settings.factor_ecm_curves,
    )


def _as_int(q: PrimePower | int) -> int:
    return q.value if isinstance(q, PrimePower) else q


@lru_cache(maxsize=2048)
def _zsigmondy(e: int, q: int) -> frozenset[int]:
    value = factorize(cyclo_eval(e, q))
    if not value.complete:
        raise FactorizationError(f"Φ_{e}({q}) not fully factored: residue {value.residue}")
    # Φ_e(q) 의 소인수 중 위수가 e 가 아닌 것은 e 를 나누는 소수뿐
    return frozenset(r for r in value.factors if q % r != 0 and mult_order(q, r) == e)


def zsigmondy_primes(e: int, q: PrimePower | int) -> set[int]:
    """q^e - 1 의 원시 소인수 전체 (q^m - 1, m < e 를 나누지 않는 소수)

    Raises:
        ValueError: e < 3
        FactorizationError: Φ_e(q) 분해가 effort_cap 안에 끝나지 않은 경우
    """
    if e < Limits.ZSIGMONDY_E_MIN:
        raise ValueError(f"zsigmondy_primes requires e >= 3, got {e}")
    return set(_zsigmondy(e, _as_int(q)))


def largest_zsigmondy_prime(e: int, q: PrimePower | int) -> int | None:
    primes = zsigmondy_primes(e, q)
    return max(primes) if primes else None


def strip_primes(n: int, primes: set[int]) -> int:
    """n 에서 주어진 소수들을 모두 제거한 값"""
    for r in primes:
        while n % r == 0:
            n //= r
    return n


def prime_powers(limit: int) -> list[int]:
    """2 ≤ q ≤ limit 인 소수 거듭제곱 (오름차순)"""
    result: list[int] = []
    for q in range(2, limit + 1):
        try:
            PrimePower.from_int(q)
        except ValueError:
            continue
        result.append(q)
    return result
