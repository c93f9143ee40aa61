"""charbound 명령행 테스트"""

import json
from collections.abc import Generator

import pytest

from src.main import main
from src.schemas.report import CheckRecord, GridConfig
from src.services.suites import set_suite
from tests.conftest import StubSuite


class CrashingSuite:
    name = "oracle"

    def run(self, config: GridConfig) -> list[CheckRecord]:
        raise ValueError("D requires rank >= 4, got 3")


@pytest.fixture
def crashing_oracle() -> Generator[None, None, None]:
    set_suite("oracle", CrashingSuite())
    yield
    set_suite("oracle", None)


@pytest.fixture
def failing_oracle() -> Generator[None, None, None]:
    set_suite("oracle", StubSuite("oracle", [CheckRecord.build("oracle_order", {}, 1, 2, False)]))
    yield
    set_suite("oracle", None)


class TestVerify:
    def test_symspin_text(self, capsys: pytest.CaptureFixture[str]) -> None:
        code = main(["verify", "--suite", "symspin", "--l-max", "8", "--n-max", "6"])
        rows = [line.split() for line in capsys.readouterr().out.splitlines()]

        assert code == 0
        assert ["star", "l=8", "PASS"] in rows

    def test_oracle_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        code = main(["verify", "--suite", "oracle", "--q-max", "4", "--format", "json"])
        payload = json.loads(capsys.readouterr().out)

        assert code == 0
        assert payload["suite"] == "oracle"
        assert payload["summary"]["failed"] == 0

    def test_failures_exit_1(
        self, failing_oracle: None, capsys: pytest.CaptureFixture[str]
    ) -> None:
        assert main(["verify", "--suite", "oracle"]) == 1
        assert "FAIL" in capsys.readouterr().out

    def test_unknown_suite_exit_2(self) -> None:
        assert main(["verify", "--suite", "bogus"]) == 2

    def test_bad_grid_exit_2(self) -> None:
        assert main(["verify", "--suite", "oracle", "--q-max", "0"]) == 2

    def test_missing_command_exit_2(self) -> None:
        assert main([]) == 2

    def test_suite_error_is_not_usage_error(
        self, crashing_oracle: None, capsys: pytest.CaptureFixture[str]
    ) -> None:
        assert main(["verify", "--suite", "oracle"]) == 3
        assert capsys.readouterr().out == ""


@pytest.mark.slow
class TestDefaultGrid:
    def test_defchar_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        code = main(["verify", "--suite", "defchar", "--format", "json"])
        payload = json.loads(capsys.readouterr().out)

        assert code == 0
        assert payload["summary"]["total"] > 0
        assert payload["summary"]["failed"] == 0

    def test_all_deterministic(self, capsys: pytest.CaptureFixture[str]) -> None:
        first_code = main(["verify", "--suite", "all", "--format", "json"])
        first = capsys.readouterr().out
        second_code = main(["verify", "--suite", "all", "--format", "json"])
        second = capsys.readouterr().out

        assert (first_code, second_code) == (0, 0)
        assert first
        assert first == second
