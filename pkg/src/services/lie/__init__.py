"""Lie 형 유한군 레지스트리

사용법:
    from src.services.lie import order, torus_entries

    spec = GroupSpec.of("C", 2, q=3)
    order(spec)          # 51840
    torus_entries(spec)  # 표의 두 행
"""

from src.services.lie.orders import (
    UnsupportedGroupError,
    center_order,
    order,
    order_data,
    order_q_prime_part,
    positive_roots,
    sylow_cyclic,
    weyl_order,
)
from src.services.lie.tori import supplementary_entries, torus_entries, twisted_factor

__all__ = [
    "UnsupportedGroupError",
    "center_order",
    "order",
    "order_data",
    "order_q_prime_part",
    "positive_roots",
    "supplementary_entries",
    "sylow_cyclic",
    "torus_entries",
    "twisted_factor",
    "weyl_order",
]
