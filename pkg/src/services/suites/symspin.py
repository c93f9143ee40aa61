"""스핀 지표 suite: (*) 부등식, 비율 항등식, 구간 연결, 분할 탐색"""

import logging

from src.config import get_settings
from src.constants import CheckStatus, Limits
from src.schemas.report import CheckRecord, GridConfig
from src.schemas.spin import SpinFamilyIndex
from src.services.symspin import (
    chaining_check,
    coverage_check,
    family_degree,
    odd_part_factorial,
    ratio_identity_check,
    star_threshold,
)

logger = logging.getLogger(__name__)

STAR_FROM = 8  # 이 l 부터 (*) 가 성립해야 함
RATIO_L_MAX = 20


class SymSpinSuite:
    name = "symspin"

    def run(self, config: GridConfig) -> list[CheckRecord]:
        settings = get_settings()
        l_max = config.l_max or settings.l_max
        n_max = min(config.n_max or settings.n_max, Limits.SPIN_COVERAGE_N_MAX)
        logger.info(f"symspin: l <= {l_max}, n <= {n_max}")

        records = self._star(l_max)
        records += [
            CheckRecord.build(
                "ratio_identity",
                {"l": level, "family": family},
                family_degree(level + 1, family),
                family_degree(level, family),
                ratio_identity_check(level, family),
            )
            for level in range(1, min(RATIO_L_MAX, l_max) + 1)
            for family in (1, 2)
        ]
        records += [
            CheckRecord.build("chaining", {"l": level}, 0, 0, chaining_check(level))
            for level in range(STAR_FROM, l_max)
        ]
        records += self._coverage(n_max)

        first, second = star_threshold(l_max)
        records.append(
            CheckRecord.build(
                "star_threshold",
                {"l_max": l_max, "second": second if second is not None else "none"},
                first if first is not None else "none",
                STAR_FROM,
                first is not None and second is not None and max(first, second) <= STAR_FROM,
            )
        )
        start = SpinFamilyIndex(level=STAR_FROM).n1
        records.append(
            CheckRecord.build(
                "family_index",
                {"l": STAR_FROM, "family": 1},
                start,
                Limits.SPIN_COVERAGE_N_MAX + 1,
                start == Limits.SPIN_COVERAGE_N_MAX + 1,
            )
        )
        return records

    def _star(self, l_max: int) -> list[CheckRecord]:
        """l 마다 두 성분을 각각 기록 (l < 8 은 분할 탐색이 덮는 구간)"""
        records: list[CheckRecord] = []
        for level in range(1, l_max + 1):
            index = SpinFamilyIndex(level=level)
            components = (
                ("star", family_degree(level, 1) ** 2, odd_part_factorial(index.n2 - 1)),
                (
                    "star_second",
                    family_degree(level, 2) ** 2,
                    odd_part_factorial(SpinFamilyIndex(level=level + 1).n1 - 1),
                ),
            )
            for check_id, lhs, rhs in components:
                passed = lhs >= rhs
                status = None if level >= STAR_FROM else CheckStatus.UNSUPPORTED
                records.append(
                    CheckRecord.build(check_id, {"l": level}, lhs, rhs, passed, status=status)
                )
        return records

    def _coverage(self, n_max: int) -> list[CheckRecord]:
        records: list[CheckRecord] = []
        for n in range(Limits.SPIN_COVERAGE_N_MIN, n_max + 1):
            report = coverage_check(n)
            params = {
                "n": n,
                "witness": "-".join(str(part) for part in report.witness.parts),
                "searched": report.partitions_searched,
                "note": report.note,
            }
            records.append(
                CheckRecord.build(
                    "coverage",
                    params,
                    report.max_degree**2,
                    report.odd_factorial,
                    report.passed,
                )
            )
        return records
