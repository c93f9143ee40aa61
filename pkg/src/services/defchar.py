"""정의 표수 부등식

각 검사는 정확한 |G|_{p'} 과 비교하고, 논증에 쓰인 중간 추정은 metadata 에 따로 기록한다.
부등식은 모두 정수형 lhs / rhs 로 만든다 (유리 차수는 분모를 rhs 로 넘김).
"""

import logging
import math
from typing import Literal

from sympy.ntheory import isprime

from src.schemas.checks import DefCharCheck
from src.schemas.lie import Family, GroupSpec
from src.schemas.numbers import PrimePower
from src.schemas.weights import Weight
from src.services.lie import center_order, order, order_q_prime_part, positive_roots
from src.services.weights import central_character, premet_bound, root_system

logger = logging.getLogger(__name__)

SmallRankKind = Literal["SL2", "SL3", "SU3", "Sp4", "SL4", "SU4"]
SubgroupKind = Literal[
    "E6", "2E6", "E7", "SLn", "SUn", "SO2n", "Spn", "Spin", "Spin2n+1", "HSpin8", "SL5", "SU5"
]

STEINBERG_RESTRICTED_SL5 = 1024  # SL5(2) 의 Steinberg 가군 차원


class NotApplicableError(Exception):
    pass


def _params(**values: object) -> dict[str, str]:
    return {key: str(value) for key, value in values.items()}


def _spec(family: Family, rank: int, q: int) -> GroupSpec:
    return GroupSpec.of(family, rank, q=q)


def steinberg_square_check(spec: GroupSpec) -> DefCharCheck:
    """St(1)² = q^{2N} > |G|_{p'}"""
    q = spec.q.value
    return DefCharCheck(
        check_id="steinberg_square",
        params=_params(group=spec.label, family=spec.family, rank=spec.rank, q=q),
        lhs=q ** (2 * positive_roots(spec)),
        rhs=order_q_prime_part(spec),
    )


def twist_scaling_check(spec: GroupSpec, r: int) -> DefCharCheck:
    """q = p 에서의 Steinberg 제곱에 비틀린 Steinberg 인수 p^{2N} 을 r-1 번 곱한 값 vs |G(p^r)|_{p'}

    Raises:
        NotApplicableError: spec 의 q 가 소수가 아니거나 Suzuki/Ree 군인 경우
        ValueError: r < 1
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if spec.q.f != 1 or spec.family in ("2B2", "2G2", "2F4"):
        raise NotApplicableError(f"{spec.label}: twist scaling starts from q = p")
    p = spec.q.p
    n_pos = positive_roots(spec)
    base = steinberg_square_check(spec)
    lifted = GroupSpec(family=spec.family, rank=spec.rank, q=PrimePower(p=p, f=r))
    return DefCharCheck(
        check_id="steinberg_twist",
        params=_params(group=lifted.label, base=spec.label, r=r),
        lhs=base.lhs * p ** (2 * n_pos * (r - 1)),
        rhs=order_q_prime_part(lifted),
        metadata=_params(base_passed=base.passed),
    )


# -- 작은 rank 합 --------------------------------------------------------------


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise ValueError(f"p must be prime, got {p}")


def _sl2_sum(p: int) -> tuple[int, int, dict[str, str]]:
    if p == 2:
        raise NotApplicableError("SL2 has trivial centre at p = 2")
    return (p - 1) ** 2, (p * p - 1) // 2, {}


def _sl3_sum(p: int, sign: int) -> tuple[int, int, dict[str, str]]:
    if (p - sign) % 3:
        kind = "SL3" if sign == 1 else "SU3"
        raise NotApplicableError(f"{kind} at p = {p} has trivial centre")
    rs = root_system("A2")
    lhs = sum(premet_bound(rs, Weight(coords=(i, i - 1))) ** 2 for i in range(1, p))
    return lhs, (p * p - 1) * (p**3 + 1) // 3, {}


def _sp4_sum(p: int) -> tuple[int, int, dict[str, str]]:
    if p == 2:
        raise NotApplicableError("Sp4 has trivial centre at p = 2")
    rs = root_system("C2")
    lhs = sum(
        premet_bound(rs, Weight(coords=(i, 2 * j + 1))) ** 2
        for i in range(p)
        for j in range((p - 1) // 2)
    )
    return lhs, (p * p - 1) * (p**4 - 1) // 2, _params(exceeds_p6=lhs > p**6)


def _a3_sum(p: int, sign: int, residue: int) -> tuple[int, int, dict[str, str]]:
    kind = "SL4" if sign == 1 else "SU4"
    if p == 2:
        raise NotApplicableError(f"{kind} has trivial centre at p = 2")
    if residue not in (1, 2):
        raise ValueError(f"residue must be 1 or 2, got {residue}")
    centre = math.gcd(4, p - sign)
    if residue == 1 and centre != 4:
        raise NotApplicableError(f"{kind} at p = {p} has no faithful characters")

    rs = root_system("A3")
    lhs = 0
    for m1 in range(p):
        for m2 in range(p):
            for m3 in range(p):
                lam = Weight(coords=(m1, m2, m3))
                if central_character("A3", lam, sign) == residue:
                    lhs += premet_bound(rs, lam) ** 2
    rhs = (p * p - 1) * (p**3 - sign) * (p**4 - 1) // centre
    return lhs, rhs, _params(residue=residue, centre=centre)


def small_rank_sum_check(kind: SmallRankKind, p: int, *, residue: int = 1) -> DefCharCheck:
    """Premet 하한의 제곱합 vs |G/Z(G)|_{p'} (비엄격)

    residue 는 SL4/SU4 에서 합을 취할 중심 지표 잉여류 (1: 충실, 2: 위수 2 핵).

    Raises:
        NotApplicableError: kind 와 p 가 맞지 않는 경우 (예: p = 2 의 SL2)
    """
    _require_prime(p)
    match kind:
        case "SL2":
            lhs, rhs, metadata = _sl2_sum(p)
        case "SL3":
            lhs, rhs, metadata = _sl3_sum(p, 1)
        case "SU3":
            lhs, rhs, metadata = _sl3_sum(p, -1)
        case "Sp4":
            lhs, rhs, metadata = _sp4_sum(p)
        case "SL4":
            lhs, rhs, metadata = _a3_sum(p, 1, residue)
        case "SU4":
            lhs, rhs, metadata = _a3_sum(p, -1, residue)
    return DefCharCheck(
        check_id=f"small_rank_sum_{kind}",
        params=_params(kind=kind, p=p, residue=residue)
        if kind in ("SL4", "SU4")
        else _params(kind=kind, p=p),
        lhs=lhs,
        rhs=rhs,
        strict=False,
        metadata=metadata,
    )


def premet_closed_form_checks(bound: int = 20) -> list[DefCharCheck]:
    """orbit 합이 닫힌 꼴 하한 3i² (A2) 와 2i² + (8j+6)i + 4(j+1)² (C2) 이상인지"""
    a2, c2 = root_system("A2"), root_system("C2")
    checks = [
        DefCharCheck(
            check_id="premet_closed_form_A2",
            params=_params(i=i),
            lhs=premet_bound(a2, Weight(coords=(i, i - 1))),
            rhs=3 * i * i,
            strict=False,
        )
        for i in range(1, bound + 1)
    ]
    c2_bound = min(bound, 10)
    checks.extend(
        DefCharCheck(
            check_id="premet_closed_form_C2",
            params=_params(i=i, j=j),
            lhs=premet_bound(c2, Weight(coords=(i, 2 * j + 1))),
            rhs=2 * i * i + (8 * j + 6) * i + 4 * (j + 1) ** 2,
            strict=False,
        )
        for i in range(c2_bound + 1)
        for j in range(c2_bound + 1)
    )
    return checks


# -- 부분군 Steinberg 차수 -------------------------------------------------------


def _require_odd(q: PrimePower, kind: str) -> None:
    if q.p == 2:
        raise NotApplicableError(f"{kind} has trivial centre in characteristic 2")


def _exceptional(family: Family, q: PrimePower) -> tuple[GroupSpec, int, dict[str, str]]:
    spec = GroupSpec.of(family, q=q.value)
    if center_order(spec) == 1:
        raise NotApplicableError(f"{spec.label} has trivial centre")
    # F4(q) (E6, 2E6) 또는 E6(q) (E7) 의 Steinberg 지표
    exponent = 48 if family in ("E6", "2E6") else 72
    return spec, q.value**exponent, {}


def _unitary_product_bound(n: int, q: int) -> int:
    return q ** ((n - 1) * (n + 2) // 2)


def _linear(kind: SubgroupKind, n: int, q: PrimePower) -> tuple[GroupSpec, int, dict[str, str]]:
    if n < 6:
        raise NotApplicableError(f"{kind} requires n >= 6, got {n}")
    spec = _spec("A" if kind == "SLn" else "2A", n, q.value)
    lhs = q.value ** ((n - 1) * (n - 2))
    estimate = _unitary_product_bound(n, q.value)
    metadata = _params(
        estimate=estimate,
        estimate_holds=order_q_prime_part(spec) <= estimate,
        estimate_tight=lhs == estimate,
    )
    return spec, lhs, metadata


def _orthogonal(n: int, q: PrimePower, sign: int) -> tuple[GroupSpec, int, dict[str, str]]:
    _require_odd(q, "SO2n")
    if n < 4:
        raise NotApplicableError(f"SO2n requires n >= 4, got {n}")
    spec = _spec("D" if sign == 1 else "2D", n, q.value)
    return spec, q.value ** (2 * (n - 1) ** 2), {}


def _symplectic_index(n: int, q: int) -> int:
    """|PSp_{2n+2}(q) : Sp_{2n}(q)∘Sp_2(q)| = |Sp_{2n+2}| / (|Sp_{2n}| |Sp_2|)"""
    big = order(_spec("C", n + 1, q))
    return big // (order(_spec("C", n, q)) * order(_spec("A", 2, q)))


def symplectic_degree_check(n: int, q: PrimePower) -> DefCharCheck:
    """PSp_{2n+2}(q) Steinberg 지표를 제한해 얻는 Sp_{2n}(q) 충실 지표

    차수 ≥ q^{(n+1)²} / ((q-1)|H:G_1|).  n ≤ 4 이고 f ≥ 2 이면 q = p 의 지표에
    비틀린 Steinberg 지표 (차수 p^{n²}) 를 f-1 번 곱한다.

    Raises:
        NotApplicableError: q 짝수, n < 3, 또는 n ∈ {3, 4} 이고 q = p (미해결)
    """
    _require_odd(q, "Spn")
    if n < 3:
        raise NotApplicableError(f"Sp{2 * n} is handled by the small-rank sums")
    if n <= 4 and q.f == 1:
        raise NotApplicableError(f"Sp{2 * n}({q.value}) at q = p is open")

    spec = _spec("C", n, q.value)
    base = q.value if n >= 5 else q.p
    index = _symplectic_index(n, base)
    denominator = ((base - 1) * index) ** 2
    lhs = base ** (2 * (n + 1) ** 2)
    if n <= 4:
        lhs *= q.p ** (2 * n * n * (q.f - 1))
    return DefCharCheck(
        check_id="subgroup_degree_Spn",
        params=_params(kind="Spn", group=spec.label, n=n, q=q.value),
        lhs=lhs,
        rhs=order_q_prime_part(spec) * denominator,
        metadata=_params(
            subgroup_index=index,
            index_formula="|Sp(2n+2)| / (|Sp(2n)| |Sp(2)|)",
            base_q=base,
        ),
    )


def _spin(kind: SubgroupKind, n: int, q: PrimePower) -> tuple[GroupSpec, int, dict[str, str]]:
    _require_odd(q, kind)
    if n < 3 or n % 2 == 0:
        raise NotApplicableError(f"{kind} requires odd n >= 3, got {n}")
    if q.f < 2:
        raise NotApplicableError(f"{kind} requires f >= 2, got q = {q.value}")
    if kind == "Spin" and n == 3:
        # D3 = A3: Spin6+(q) = SL4(q)
        spec = _spec("A", 4, q.value)
    else:
        spec = _spec("D" if kind == "Spin" else "B", n, q.value)
    # SL_n(p) Steinberg 지표의 확장 (p^{n(n-1)/2}) 과 비틀린 Steinberg 인수 (q/p)^{n²}
    degree = (q.value // q.p) ** (n * n) * q.p ** (n * (n - 1) // 2)
    return spec, degree * degree, {}


def _half_spin(q: PrimePower) -> tuple[GroupSpec, int, dict[str, str]]:
    _require_odd(q, "HSpin8")
    # 삼중성으로 SO8+(q) 와 같은 군, 저장된 차수 q^9
    return _spec("D", 4, q.value), q.value**18, _params(stored_degree=f"q^9 = {q.value**9}")


def _rank5(kind: SubgroupKind, q: PrimePower) -> tuple[GroupSpec, int, dict[str, str]]:
    """SL5(2^f), SU5(2^f): f ≥ 3 은 자연 가군 ⊗ 비틀린 Steinberg, SU5(4) 는 St ⊗ Λ²(자연 가군)"""
    if q.p != 2:
        raise NotApplicableError(f"{kind} check is for characteristic 2")
    spec = _spec("A" if kind == "SL5" else "2A", 5, q.value)
    if kind == "SU5" and q.f == 2:
        degree = 10 * q.value**10
        return spec, degree * degree, _params(module="St x exterior square")
    if q.f < 3:
        raise NotApplicableError(f"{kind}({q.value}) has trivial centre")
    degree = 5 * STEINBERG_RESTRICTED_SL5 ** (q.f - 1)
    return spec, degree * degree, _params(module="natural x twisted St")


def subgroup_degree_check(
    kind: SubgroupKind, n: int, q: int | PrimePower, *, sign: int = 1
) -> DefCharCheck:
    """부분군의 Steinberg 지표에서 얻은 충실 Brauer 지표 차수의 제곱 vs |G|_{p'}

    n 은 E6/2E6/E7/HSpin8/SL5/SU5 에서 무시된다. sign 은 SO2n 의 ± 형.

    Raises:
        NotApplicableError: 논증의 매개변수 범위 밖
    """
    prime_power = q if isinstance(q, PrimePower) else PrimePower.from_int(q)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    match kind:
        case "Spn":
            return symplectic_degree_check(n, prime_power)
        case "E6" | "2E6" | "E7":
            spec, lhs, metadata = _exceptional(kind, prime_power)
        case "SLn" | "SUn":
            spec, lhs, metadata = _linear(kind, n, prime_power)
        case "SO2n":
            spec, lhs, metadata = _orthogonal(n, prime_power, sign)
        case "Spin" | "Spin2n+1":
            spec, lhs, metadata = _spin(kind, n, prime_power)
        case "HSpin8":
            spec, lhs, metadata = _half_spin(prime_power)
        case "SL5" | "SU5":
            spec, lhs, metadata = _rank5(kind, prime_power)

    rhs = order_q_prime_part(spec)
    check = DefCharCheck(
        check_id=f"subgroup_degree_{kind}",
        params=_params(kind=kind, group=spec.label, n=spec.rank, q=prime_power.value),
        lhs=lhs,
        rhs=rhs,
        tight=metadata.get("estimate_tight") == "True",
        metadata=metadata,
    )
    if check.tight:
        logger.info(f"중간 추정과 등호: {spec.label}")
    return check


def unitary_estimate_check(k: int, q: int) -> DefCharCheck:
    """(q^k - 1)(q^{k+1} + 1) ≤ q^{2k+1} (k ≥ 2)"""
    if k < 2 or q < 2:
        raise ValueError(f"unitary estimate requires k >= 2 and q >= 2, got ({k}, {q})")
    return DefCharCheck(
        check_id="unitary_estimate",
        params=_params(k=k, q=q),
        lhs=q ** (2 * k + 1),
        rhs=(q**k - 1) * (q ** (k + 1) + 1),
        strict=False,
    )


def open_cases(q_max: int) -> list[dict[str, str]]:
    """논증이 닫지 못한 경우: Sp6(p), Sp8(p) (p 홀수), Spin8-(p²)"""
    cases: list[dict[str, str]] = []
    for p in range(3, q_max + 1, 2):
        if not isprime(p):
            continue
        cases.extend(_params(kind="Spn", group=f"Sp{2 * n}({p})", n=n, q=p) for n in (3, 4))
        if p * p <= q_max:
            cases.append(_params(kind="Spin8-", group=f"2D4({p * p})", n=4, q=p * p))
    return cases
