from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime limits and logging, read from ZMTOOL_* variables or a .env file."""

    model_config = SettingsConfigDict(
        env_prefix="ZMTOOL_", env_file=".env", extra="ignore")

    # oracle budget on the group order mn (conjugation checks, verify)
    budget: int = 2000
    # automorphism oracle budget on mn
    aut_budget: int = 200
    subgroup_budget: int = 360
    element_budget: int = 1_000_000
    # largest |Aut| summed term by term before switching to the regrouped count
    aut_enumeration_budget: int = 2_000_000
    log_level: str = "WARNING"


@lru_cache()
def get_settings() -> Settings:
    return Settings()
