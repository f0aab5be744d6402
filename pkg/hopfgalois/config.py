"""Engine settings read from HOPFGALOIS_* environment variables or a .env file."""

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings loaded from environment variables (prefix ``HOPFGALOIS_``)."""

    # Environment
    ENVIRONMENT: str = "production"

    # File format
    FORMAT_VERSION: str = "1"

    # Engine
    THREADS: int = 1  # per-irrep worker threads; never changes results
    MAX_GROUP_ORDER: int = 24

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "console"  # json or console

    # OpenTelemetry Configuration
    OTEL_SERVICE_NAME: str = "hopfgalois"
    OTEL_TRACE_SAMPLE_RATE: float = 1.0
    OTEL_EXPORT_CONSOLE: bool = False

    @field_validator("THREADS")
    @classmethod
    def validate_threads(cls, v: int) -> int:
        """Reject non-positive thread counts."""
        if v < 1:
            raise ValueError("THREADS must be at least 1")
        return v

    @field_validator("LOG_LEVEL")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        """Upper-case the level and check it is a logging level name."""
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("LOG_FORMAT")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        """Accept only the two supported formatters."""
        if v not in {"json", "console"}:
            raise ValueError("LOG_FORMAT must be 'json' or 'console'")
        return v

    model_config = SettingsConfigDict(
        env_prefix="HOPFGALOIS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )


# Global settings instance
settings = Settings()
