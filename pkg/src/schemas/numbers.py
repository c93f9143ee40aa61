"""정수 도메인 타입

|G|, |T|, n! 등 모든 차수 값이 NatFactored / PrimePower 로 표현된다.
"""

import math
from typing import Self

from pydantic import model_validator
from sympy import isprime, perfect_power

from src.schemas.base import BaseSchema


class PrimePower(BaseSchema):
    """소수 거듭제곱 q = p^f"""

    p: int
    f: int

    @model_validator(mode="after")
    def validate_prime_power(self) -> Self:
        if not isprime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.f < 1:
            raise ValueError(f"f must be positive, got {self.f}")
        return self

    @property
    def value(self) -> int:
        return self.p**self.f

    @classmethod
    def from_int(cls, q: int) -> "PrimePower":
        """정수 q를 p^f 로 분해

        Raises:
            ValueError: q가 소수 거듭제곱이 아닌 경우
        """
        if q < 2:
            raise ValueError(f"Not a prime power: {q}")
        if isprime(q):
            return cls(p=q, f=1)
        power = perfect_power(q)
        if not power or not isprime(int(power[0])):
            raise ValueError(f"Not a prime power: {q}")
        base, exp = int(power[0]), int(power[1])
        return cls(p=base, f=exp)

    def __str__(self) -> str:
        return str(self.value)


class NatFactored(BaseSchema):
    """부분 소인수분해된 자연수

    value = residue · ∏ prime^exponent. 완전 분해 시 residue = 1.
    """

    value: int
    factors: dict[int, int]
    residue: int = 1

    @model_validator(mode="after")
    def validate_reconstruction(self) -> Self:
        product = math.prod(prime**exp for prime, exp in self.factors.items())
        if self.residue * product != self.value:
            raise ValueError(f"Factorization does not reconstruct {self.value}")
        for prime in self.factors:
            if not isprime(prime):
                raise ValueError(f"Non-prime factor key: {prime}")
        return self

    @property
    def complete(self) -> bool:
        return self.residue == 1

    @property
    def primes(self) -> list[int]:
        return sorted(self.factors)
