from functools import lru_cache
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Settings for the application.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        validate_assignment=True,
        extra="ignore",
    )

    # Application.
    RC_APP_NAME: str = "rainbow"
    RC_VERSION: str = "0.1.0"

    # Verifier configuration.
    RC_VERIFIER_MAX_COLORS: int = 64

    # Oracle configuration.
    RC_ORACLE_MAX_EDGES: int = 9
    RC_ORACLE_MAX_COLORS: int = 12
    RC_ORACLE_TIME_BUDGET: float = 60.0

    # Generator configuration.
    RC_GENERATOR_MAX_ATTEMPTS: int = 1000

    # Report configuration.
    RC_REPORT_TIMINGS: bool = False

    # Corpus mode.
    RC_JOBS: int = 1


@lru_cache
def get_settings() -> Settings:
    """
    Get the settings for the application.

    Returns:
        Settings: The application settings.
    """

    return Settings()
