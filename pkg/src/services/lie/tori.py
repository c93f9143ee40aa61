"""극대 토러스 표 (고전형 / 예외형)

각 행: 토러스 위수, Zsigmondy 지수 e, 정규화군 지수 |N_G(T):T|,
정칙 반단순 류 개수의 하한 n_reg(T). 표의 식을 그대로 (rank, q) 에서 평가한다.
"""

import math
from fractions import Fraction

from src.schemas.lie import GroupSpec, TorusEntry
from src.services.exactnum import cyclo_eval, strip_primes, zsigmondy_primes
from src.services.lie.orders import UnsupportedGroupError


def _exact_sqrt(n: int) -> int:
    root = math.isqrt(n)
    if root * root != n:
        raise UnsupportedGroupError(f"sqrt({n}) is not an integer")
    return root


def twisted_factor(name: str, big_q: int) -> int:
    """Suzuki/Ree 토러스 인수 Φ_8'', Φ_12'', Φ_24'' 의 정확한 값"""
    match name:
        case "phi8pp":
            return big_q + _exact_sqrt(2 * big_q) + 1
        case "phi12pp":
            return big_q + _exact_sqrt(3 * big_q) + 1
        case "phi24pp":
            s = _exact_sqrt(2 * big_q)
            return big_q * big_q + s * big_q + big_q + s + 1
        case _:
            raise ValueError(f"Unknown twisted factor: {name!r}")


def _row(
    condition: str,
    order_expr: str,
    order: int,
    e: int,
    index: int,
    bound_expr: str,
    bound: Fraction,
    *,
    noncyclic_image: bool = False,
) -> TorusEntry:
    return TorusEntry(
        condition=condition,
        order_expr=order_expr,
        order=order,
        e=e,
        normalizer_index=index,
        bound_expr=bound_expr,
        nreg_bound=bound,
        noncyclic_image=noncyclic_image,
    )


def _type_a(n: int, q: int) -> list[TorusEntry]:
    if n == 2:
        return [
            _row("n=2", "q+1", q + 1, 2, 2, "(q-1)/2", Fraction(q - 1, 2)),
            _row("n=2", "q-1", q - 1, 1, 2, "(q-3)/2", Fraction(q - 3, 2)),
        ]
    t1 = (q**n - 1) // (q - 1)
    t2 = q ** (n - 1) - 1
    return [
        _row("n>=3", "(q^n-1)/(q-1)", t1, n, n, "|T|/(n+1)", Fraction(t1, n + 1)),
        _row("n>=3", "q^(n-1)-1", t2, n - 1, n - 1, "|T|/n", Fraction(t2, n)),
    ]


def _type_2a(n: int, q: int) -> list[TorusEntry]:
    if n % 2:
        t1 = (q**n + 1) // (q + 1)
        t2 = q ** (n - 1) - 1
        return [
            _row(
                "n odd", "(q^n+1)/(q+1)", t1, 2 * n, n, "2|T|/(2n+1)", Fraction(2 * t1, 2 * n + 1)
            ),
            _row("n odd", "q^(n-1)-1", t2, n - 1, n - 1, "|T|/n", Fraction(t2, n)),
        ]
    t1 = q ** (n - 1) + 1
    t2 = (q**n - 1) // (q + 1)
    return [
        _row(
            "n even", "q^(n-1)+1", t1, 2 * n - 2, n - 1, "2|T|/(2n-1)", Fraction(2 * t1, 2 * n - 1)
        ),
        _row("n even", "(q^n-1)/(q+1)", t2, n, n, "|T|/(n+1)", Fraction(t2, n + 1)),
    ]


def _type_bc(n: int, q: int) -> list[TorusEntry]:
    t1 = q**n + 1
    rows = [_row("all n", "q^n+1", t1, 2 * n, 2 * n, "|T|/(2n+1)", Fraction(t1, 2 * n + 1))]
    if n == 2:
        rows.append(
            _row("n=2", "q^2-1", q * q - 1, 2, 4, "(q-1)(q-2)/4", Fraction((q - 1) * (q - 2), 4))
        )
    elif n % 2 == 0:
        t2 = (q ** (n - 1) - 1) * (q + 1)
        rows.append(
            _row(
                "4<=n even",
                "(q^(n-1)-1)(q+1)",
                t2,
                n - 1,
                4 * n - 4,
                "(q^(n-1)-1)(q-1)/(4n)",
                Fraction((q ** (n - 1) - 1) * (q - 1), 4 * n),
            )
        )
    else:
        t2 = q**n - 1
        rows.append(_row("n odd", "q^n-1", t2, n, 2 * n, "|T|/(2n+2)", Fraction(t2, 2 * n + 2)))
    return rows


def _type_d(n: int, q: int) -> list[TorusEntry]:
    t1 = (q ** (n - 1) + 1) * (q + 1)
    rows = [
        _row(
            "all n",
            "(q^(n-1)+1)(q+1)",
            t1,
            2 * n - 2,
            2 * n - 2,
            "|T|/(2n-1)",
            Fraction(t1, 2 * n - 1),
            noncyclic_image=True,
        )
    ]
    if n % 2 == 0:
        t2 = (q ** (n - 1) - 1) * (q - 1)
        rows.append(
            _row(
                "n even",
                "(q^(n-1)-1)(q-1)",
                t2,
                n - 1,
                2 * n - 2,
                "|T|/(2n)",
                Fraction(t2, 2 * n),
                noncyclic_image=True,
            )
        )
    else:
        t2 = q**n - 1
        rows.append(
            _row(
                "n odd", "q^n-1", t2, n, n, "|T|/(n+1)", Fraction(t2, n + 1), noncyclic_image=True
            )
        )
    return rows


def _type_2d(n: int, q: int) -> list[TorusEntry]:
    t1 = q**n + 1
    t2 = (q ** (n - 1) + 1) * (q - 1)
    return [
        _row("all n", "q^n+1", t1, 2 * n, n, "2|T|/(2n+1)", Fraction(2 * t1, 2 * n + 1)),
        _row(
            "all n",
            "(q^(n-1)+1)(q-1)",
            t2,
            2 * n - 2,
            2 * n - 2,
            "|T|/(2n-1)",
            Fraction(t2, 2 * n - 1),
        ),
    ]


def _single(condition: str, expr: str, order: int, e: int, index: int) -> list[TorusEntry]:
    return [_row(condition, expr, order, e, index, f"(|T|-1)/{index}", Fraction(order - 1, index))]


def _exceptional(family: str, q: int) -> list[TorusEntry]:
    match family:
        case "2B2":
            return _single("Q>=8", "phi8''", twisted_factor("phi8pp", q), 0, 4)
        case "2G2":
            return _single("Q>=27", "phi12''", twisted_factor("phi12pp", q), 0, 6)
        case "2F4":
            if q == 2:
                raise UnsupportedGroupError("2F4(2) is outside the torus tables")
            return _single("Q>=8", "phi24''", twisted_factor("phi24pp", q), 0, 12)
        case "G2":
            if q % 3 == 1:
                return _single("q=1 mod 3", "phi6", cyclo_eval(6, q), 6, 6)
            return _single("q!=1 mod 3", "phi3", cyclo_eval(3, q), 3, 6)
        case "3D4":
            return _single("all q", "phi12", cyclo_eval(12, q), 12, 4)
        case "F4":
            return _single("all q", "phi12", cyclo_eval(12, q), 12, 12)
        case "E6":
            t = cyclo_eval(9, q)
            z = math.gcd(3, q - 1)
            return [_row("all q", "phi9", t, 9, 9, "(|T|-(3,q-1))/9", Fraction(t - z, 9))]
        case "2E6":
            t = cyclo_eval(18, q)
            z = math.gcd(3, q + 1)
            return [_row("all q", "phi18", t, 18, 9, "(|T|-(3,q+1))/9", Fraction(t - z, 9))]
        case "E7":
            bound = Fraction(q**7 - q, 14)
            return [
                _row("all q", "phi2*phi14", cyclo_eval(2, q) * cyclo_eval(14, q), 14, 14,
                     "(q^7-q)/14", bound),
                _row("all q", "phi1*phi7", cyclo_eval(1, q) * cyclo_eval(7, q), 7, 14,
                     "(q^7-q)/14", bound),
            ]
        case "E8":
            return _single("all q", "phi24", cyclo_eval(24, q), 24, 24)
        case _:
            raise UnsupportedGroupError(f"No torus table for family {family!r}")


def torus_entries(spec: GroupSpec) -> list[TorusEntry]:
    """(rank, q) 에서 평가된 표의 행들

    고전형은 위수의 gcd 가 center_order 와 같은 두 토러스를 반환한다.

    Raises:
        UnsupportedGroupError: 두 표 모두에 없는 군 (예: 2F4(2))
    """
    n, q = spec.rank, spec.q.value
    match spec.family:
        case "A":
            return _type_a(n, q)
        case "2A":
            return _type_2a(n, q)
        case "B" | "C":
            return _type_bc(n, q)
        case "D":
            return _type_d(n, q)
        case "2D":
            return _type_2d(n, q)
        case _:
            return _exceptional(spec.family, q)


def supplementary_entries(spec: GroupSpec) -> list[TorusEntry]:
    """표 밖의 보조 토러스 (F4 의 Φ_8 토러스)

    n_reg ≥ (|T| - |T|_{z'})/8, |T|_{z'} 는 z_8(q) 소수를 제거한 부분.
    """
    if spec.family != "F4":
        return []
    q = spec.q.value
    t = cyclo_eval(8, q)
    regular = t - strip_primes(t, zsigmondy_primes(8, q))
    return [
        TorusEntry(
            condition="all q",
            order_expr="phi8",
            order=t,
            e=8,
            normalizer_index=8,
            bound_expr="(|T|-|T|_z')/8",
            nreg_bound=Fraction(regular, 8),
            supplementary=True,
        )
    ]
