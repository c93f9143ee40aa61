"""suite 실행과 보고서 출력

"all" 은 suite 들을 스레드에서 동시에 돌리고, 결과는 정렬 후 합쳐
실행 순서와 무관하게 같은 보고서를 만든다.
"""

import asyncio
import logging
from typing import Literal

from src.schemas.report import CheckRecord, GridConfig, VerificationReport
from src.services.suites import ALL_SUITES, SUITE_NAMES, get_suite

logger = logging.getLogger(__name__)

OutputFormat = Literal["text", "json"]


async def _run_all(config: GridConfig) -> list[CheckRecord]:
    results = await asyncio.gather(
        *(asyncio.to_thread(get_suite(name).run, config) for name in ALL_SUITES)
    )
    return [record for records in results for record in records]


def run(suite: str, config: GridConfig) -> VerificationReport:
    """suite 하나 (또는 "all") 를 실행해 보고서 생성

    Raises:
        ValueError: 알 수 없는 suite 이름
    """
    if suite not in SUITE_NAMES:
        raise ValueError(f"Unknown suite: {suite!r}")
    if suite == "all":
        records = asyncio.run(_run_all(config))
    else:
        records = get_suite(suite).run(config)
    report = VerificationReport.of(suite, records)
    logger.info(
        f"{suite}: {report.summary.total}개 검사, {report.summary.failed}개 실패, "
        f"{report.summary.unsupported}개 미지원"
    )
    return report


def _status_label(record: CheckRecord) -> str:
    return record.status.upper()


def _text(report: VerificationReport) -> str:
    rows = [
        (
            " ".join([record.check_id, *(f"{k}={v}" for k, v in record.params.items())]),
            _status_label(record),
        )
        for record in report.checks
    ]
    width = max((len(label) for label, _ in rows), default=0)
    lines = [f"{label.ljust(width)} {status}" for label, status in rows]
    s = report.summary
    lines.append(
        f"suite={report.suite} total={s.total} passed={s.passed} failed={s.failed} "
        f"skipped_cyclic={s.skipped_cyclic} unsupported={s.unsupported}"
    )
    return "\n".join(lines) + "\n"


def emit(report: VerificationReport, fmt: OutputFormat = "text") -> bytes:
    """보고서를 text 표 또는 JSON 으로 직렬화

    Raises:
        ValueError: 알 수 없는 형식
    """
    if fmt == "json":
        return (report.model_dump_json(by_alias=True, indent=2) + "\n").encode()
    if fmt == "text":
        return _text(report).encode()
    raise ValueError(f"Unknown format: {fmt!r}")
