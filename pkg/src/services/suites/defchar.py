"""정의 표수 suite"""

import logging
from collections.abc import Callable
from typing import ParamSpec

from sympy import primerange

from src.config import get_settings
from src.constants import CheckStatus
from src.schemas.checks import DefCharCheck
from src.schemas.numbers import PrimePower
from src.schemas.report import CheckRecord, GridConfig
from src.services.defchar import (
    NotApplicableError,
    SmallRankKind,
    SubgroupKind,
    open_cases,
    premet_closed_form_checks,
    small_rank_sum_check,
    steinberg_square_check,
    subgroup_degree_check,
    twist_scaling_check,
    unitary_estimate_check,
)
from src.services.exactnum import prime_powers
from src.services.regclasses import grid_specs
from src.services.suites.base import from_defchar

logger = logging.getLogger(__name__)

TWIST_R_MAX = 3
UNITARY_K_MAX = 40
SMALL_RANK_KINDS: tuple[SmallRankKind, ...] = ("SL2", "SL3", "SU3", "Sp4")
RANK3_KINDS: tuple[SmallRankKind, ...] = ("SL4", "SU4")
FIXED_RANK_KINDS: tuple[SubgroupKind, ...] = ("E6", "2E6", "E7", "HSpin8", "SL5", "SU5")
RANKED_KINDS: tuple[SubgroupKind, ...] = ("SLn", "SUn", "Spn", "Spin", "Spin2n+1")

P = ParamSpec("P")


def _applicable(
    build: Callable[P, DefCharCheck], *args: P.args, **kwargs: P.kwargs
) -> list[CheckRecord]:
    """범위 밖 (NotApplicableError) 이면 빈 목록"""
    try:
        return [from_defchar(build(*args, **kwargs))]
    except NotApplicableError:
        return []


class DefCharSuite:
    name = "defchar"

    def run(self, config: GridConfig) -> list[CheckRecord]:
        settings = get_settings()
        rank_max = config.rank_max or settings.rank_max
        q_max = config.q_max or settings.q_max
        p_max = config.p_max or settings.p_max
        logger.info(f"defchar: rank <= {rank_max}, q <= {q_max}, p <= {p_max}")

        records = self._steinberg(rank_max, q_max)
        records += self._small_rank(p_max, min(p_max, settings.rank3_p_max))
        records += [from_defchar(c) for c in premet_closed_form_checks()]
        records += self._subgroups(rank_max, q_max)
        records += [
            from_defchar(unitary_estimate_check(k, q))
            for k in range(2, UNITARY_K_MAX + 1)
            for q in prime_powers(q_max)
        ]
        records += [
            CheckRecord.build(
                "open_case", {**case, "note": "open"}, 0, 0, False, status=CheckStatus.UNSUPPORTED
            )
            for case in open_cases(q_max)
        ]
        return records

    def _steinberg(self, rank_max: int, q_max: int) -> list[CheckRecord]:
        records: list[CheckRecord] = []
        for spec in grid_specs(rank_max, q_max):
            records.append(from_defchar(steinberg_square_check(spec)))
            if spec.q.f != 1:
                continue
            for r in range(2, TWIST_R_MAX + 1):
                records += _applicable(twist_scaling_check, spec, r)
        return records

    def _small_rank(self, p_max: int, rank3_p_max: int) -> list[CheckRecord]:
        records: list[CheckRecord] = []
        for p in primerange(2, p_max + 1):
            prime = int(p)
            for kind in SMALL_RANK_KINDS:
                records += _applicable(small_rank_sum_check, kind, prime)
            if prime > rank3_p_max:
                continue
            for kind in RANK3_KINDS:
                for residue in (1, 2):
                    records += _applicable(small_rank_sum_check, kind, prime, residue=residue)
        return records

    def _subgroups(self, rank_max: int, q_max: int) -> list[CheckRecord]:
        records: list[CheckRecord] = []
        n_max = max(rank_max, 6)
        for q in prime_powers(q_max):
            prime_power = PrimePower.from_int(q)
            for kind in FIXED_RANK_KINDS:
                records += _applicable(subgroup_degree_check, kind, 0, prime_power)
            for n in range(3, n_max + 1):
                for kind in RANKED_KINDS:
                    records += _applicable(subgroup_degree_check, kind, n, prime_power)
                for sign in (1, -1):
                    records += _applicable(subgroup_degree_check, "SO2n", n, prime_power, sign=sign)
        return records
