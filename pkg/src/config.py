from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="CHARBOUND_")

    # Logging
    log_level: str = "WARNING"

    # Factorization
    factor_trial_bound: int = 10_000
    factor_effort_cap: int = 200_000
    factor_rho_seed: int = 1234
    factor_ecm_curves: int = 200  # rho 실패 시 ECM 곡선 수, 0 이면 끔

    # Grids (regclasses / defchar)
    rank_max: int = 8
    q_max: int = 9

    # Grids (crosschar residual scan)
    crosschar_rank_max: int = 12
    crosschar_q_max: int = 5

    # Small-rank sums
    p_max: int = 199
    rank3_p_max: int = 13  # SL4/SU4: 비용이 p^3 에 비례

    # Spin characters
    l_max: int = 50
    n_max: int = 40

    # SL2 oracle
    oracle_q_max: int = 11


@lru_cache
def get_settings() -> Settings:
    return Settings()
