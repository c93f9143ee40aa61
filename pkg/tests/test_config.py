import pytest

from src.config import Settings, get_settings


class TestSettings:
    def test_defaults(self) -> None:
        settings = Settings()

        assert settings.rank_max == 8
        assert settings.q_max == 9
        assert settings.crosschar_rank_max == 12
        assert settings.crosschar_q_max == 5
        assert settings.l_max == 50
        assert settings.oracle_q_max == 11

    def test_env_prefix(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("CHARBOUND_P_MAX", "31")
        assert get_settings().p_max == 31

    def test_cached(self) -> None:
        assert get_settings() is get_settings()
