"""charbound 명령행

    charbound verify --suite symspin --l-max 50 --format json

종료 코드: 0 모든 검사 통과, 1 실패 포함, 2 사용법 오류, 3 검사 중 내부 오류
"""

import argparse
import logging
import sys
from collections.abc import Sequence

from src.config import get_settings
from src.schemas.report import GridConfig
from src.services.report import emit, run
from src.services.suites import SUITE_NAMES

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="charbound")
    commands = parser.add_subparsers(dest="command", required=True)
    verify = commands.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", choices=SUITE_NAMES, default="all")
    verify.add_argument("--rank-max", type=int)
    verify.add_argument("--q-max", type=int)
    verify.add_argument("--p-max", type=int)
    verify.add_argument("--l-max", type=int)
    verify.add_argument("--n-max", type=int)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    logging.basicConfig(
        level=get_settings().log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = GridConfig(
            rank_max=args.rank_max,
            q_max=args.q_max,
            p_max=args.p_max,
            l_max=args.l_max,
            n_max=args.n_max,
        )
    except ValueError as e:
        logger.error(f"잘못된 설정: {e}")
        return EXIT_USAGE

    try:
        report = run(args.suite, config)
    except Exception as e:
        logger.exception(f"{args.suite} 실행 중 오류: {e}")
        return EXIT_INTERNAL

    sys.stdout.buffer.write(emit(report, args.format))
    sys.stdout.flush()
    return EXIT_FAILURES if report.summary.failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
