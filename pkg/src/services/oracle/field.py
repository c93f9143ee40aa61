"""GF(q) 연산 표 (galois)"""

import logging
from functools import lru_cache

import galois
import numpy as np

from src.schemas.oracle import FieldTables

logger = logging.getLogger(__name__)


def _as_rows(table: np.ndarray) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in table.tolist())


@lru_cache(maxsize=None)
def field_tables(q: int) -> FieldTables:
    """galois.GF(q) 의 고정 기약다항식으로 만든 연산 표

    Raises:
        ValueError: q 가 소수 거듭제곱이 아닌 경우 (galois 가 거부)
    """
    gf = galois.GF(q)
    x = gf.elements
    add = np.asarray(x[:, np.newaxis] + x[np.newaxis, :]).view(np.ndarray)
    mul = np.asarray(x[:, np.newaxis] * x[np.newaxis, :]).view(np.ndarray)
    neg = np.asarray(-x).view(np.ndarray)
    inv = [0, *(int(v) for v in np.asarray(x[1:] ** -1).view(np.ndarray).tolist())]
    logger.debug(f"GF({q}) 기약다항식: {gf.irreducible_poly}")
    return FieldTables(
        q=q,
        p=int(gf.characteristic),
        degree=int(gf.degree),
        irreducible_poly=str(gf.irreducible_poly),
        add=_as_rows(add),
        mul=_as_rows(mul),
        neg=tuple(int(v) for v in neg.tolist()),
        inv=tuple(inv),
    )
