"""SL2(q) 전수 조사 suite"""

import logging

from src.config import get_settings
from src.constants import Limits
from src.schemas.report import CheckRecord, GridConfig
from src.services.exactnum import prime_powers
from src.services.oracle import compare_with_tables, enumerate_sl2

logger = logging.getLogger(__name__)

ORACLE_Q_MIN = 3
QUASI_SIMPLE_Q_MIN = 4


class OracleSuite:
    name = "oracle"

    def run(self, config: GridConfig) -> list[CheckRecord]:
        settings = get_settings()
        q_max = min(config.q_max or settings.oracle_q_max, Limits.ORACLE_Q_MAX)
        logger.info(f"oracle: SL2(q), {ORACLE_Q_MIN} <= q <= {q_max}")
        records: list[CheckRecord] = []
        for q in prime_powers(q_max):
            if q >= ORACLE_Q_MIN:
                records += self._group_records(q)
        return records

    def _group_records(self, q: int) -> list[CheckRecord]:
        group = enumerate_sl2(q)
        result = compare_with_tables(group)
        params: dict[str, object] = {"q": q, "poly": group.irreducible_poly}
        records = [
            CheckRecord.build(
                "oracle_order",
                params,
                result.group_order,
                result.formula_order,
                result.group_order == result.formula_order,
            ),
            CheckRecord.build(
                "oracle_p_prime_part",
                params,
                result.p_prime_part,
                q * q - 1,
                result.p_prime_part == q * q - 1,
            ),
            CheckRecord.build(
                "oracle_class_equation",
                {**params, "classes": len(group.classes)},
                sum(c.size for c in group.classes),
                result.group_order,
                result.class_equation and result.centralizer_duality,
            ),
        ]
        records += [
            CheckRecord.build(
                "oracle_torus",
                {"q": q, "torus_order": torus.torus_order},
                torus.count,
                torus.bound,
                torus.passed,
            )
            for torus in result.torus_counts
        ]
        if q >= QUASI_SIMPLE_Q_MIN:
            records.append(
                CheckRecord.build(
                    "oracle_regular_classes",
                    {"q": q},
                    result.regular_classes,
                    2,
                    result.regular_classes >= 2,
                )
            )
        return records
