"""정칙 반단순 류 suite: 하한 목록, "정칙 류 두 개", Zsigmondy 존재, 중심 gcd"""

import logging
import math

from src.config import get_settings
from src.constants import CheckStatus, Families, Provenance
from src.schemas.checks import RegBound
from src.schemas.lie import GroupSpec
from src.schemas.report import CheckRecord, GridConfig
from src.services.exactnum import FactorizationError, prime_powers, zsigmondy_primes
from src.services.lie import UnsupportedGroupError, center_order, torus_entries
from src.services.regclasses import (
    NON_QUASI_SIMPLE,
    STORED_COROLLARY_VERDICTS,
    corollary_margin,
    grid_specs,
    group_key,
    scan_all,
    two_regular_classes_check,
)

logger = logging.getLogger(__name__)

ZSIGMONDY_E_MAX = 30


def _bound_record(bound: RegBound) -> CheckRecord:
    params: dict[str, object] = {
        "group": bound.spec.label,
        "torus": bound.torus_index,
        "torus_order": bound.torus_order,
        "e": bound.e,
        "source": bound.source,
    }
    if bound.source == "exception_table":
        # 지표표로 다루는 군: 공식 값만 보고
        return CheckRecord.build(
            "nreg_bound", params, bound.bound, 0, True, status=CheckStatus.UNSUPPORTED
        )
    provenance = Provenance.STORED if bound.source == "zsigmondy_6_2_table" else Provenance.COMPUTED
    return CheckRecord.build("nreg_bound", params, bound.bound, 0, True, provenance=provenance)


def _group_params(spec: GroupSpec) -> dict[str, object]:
    return {"group": spec.label, "family": spec.family, "rank": spec.rank, "q": spec.q.value}


class RegClassesSuite:
    name = "regclasses"

    def run(self, config: GridConfig) -> list[CheckRecord]:
        settings = get_settings()
        rank_max = config.rank_max or settings.rank_max
        q_max = config.q_max or settings.q_max
        logger.info(f"regclasses: rank <= {rank_max}, q <= {q_max}")

        records = [_bound_record(b) for b in scan_all(rank_max, q_max)]
        records += self._corollary(rank_max, q_max)
        records += self._zsigmondy(q_max)
        records += self._center_gcd(rank_max, q_max)
        return records

    def _corollary(self, rank_max: int, q_max: int) -> list[CheckRecord]:
        records: list[CheckRecord] = []
        for spec in grid_specs(rank_max, q_max):
            key = group_key(spec)
            if key in NON_QUASI_SIMPLE:
                continue
            params = _group_params(spec)
            if key in STORED_COROLLARY_VERDICTS:
                verdict = two_regular_classes_check(spec)
                records.append(
                    CheckRecord.build(
                        "two_regular_classes",
                        params,
                        int(verdict),
                        1,
                        verdict,
                        provenance=Provenance.STORED,
                    )
                )
                continue
            try:
                certified, required = corollary_margin(spec)
            except UnsupportedGroupError as e:
                records.append(
                    CheckRecord.build(
                        "two_regular_classes", params, 0, 0, False, status=CheckStatus.UNSUPPORTED
                    )
                )
                logger.warning(f"판정 불가: {e}")
                continue
            records.append(
                CheckRecord.build(
                    "two_regular_classes", params, certified, required, certified >= required
                )
            )
        return records

    def _zsigmondy(self, q_max: int) -> list[CheckRecord]:
        records: list[CheckRecord] = []
        for q in prime_powers(q_max):
            for e in range(3, ZSIGMONDY_E_MAX + 1):
                params = {"e": e, "q": q}
                try:
                    primes = zsigmondy_primes(e, q)
                except FactorizationError as err:
                    logger.warning(f"Zsigmondy 검사 생략: {err}")
                    records.append(
                        CheckRecord.build(
                            "zsigmondy_exists", params, 0, 1, False, status=CheckStatus.UNSUPPORTED
                        )
                    )
                    continue
                expected = 0 if (e, q) == (6, 2) else 1
                passed = (len(primes) > 0) == bool(expected) and all(r >= e + 1 for r in primes)
                records.append(
                    CheckRecord.build("zsigmondy_exists", params, len(primes), expected, passed)
                )
        return records

    def _center_gcd(self, rank_max: int, q_max: int) -> list[CheckRecord]:
        records: list[CheckRecord] = []
        for spec in grid_specs(rank_max, q_max):
            if spec.family not in Families.CLASSICAL:
                continue
            entries = torus_entries(spec)
            observed = math.gcd(*(entry.order for entry in entries))
            expected = center_order(spec)
            records.append(
                CheckRecord.build(
                    "center_gcd",
                    _group_params(spec),
                    observed,
                    expected,
                    observed == expected,
                )
            )
        return records
