"""Application settings using pydantic-settings for environment variable validation."""

from functools import lru_cache
from typing import Literal

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from sympy import isprime


class Settings(BaseSettings):
    """Application settings with environment variable validation.

    Settings can be configured via environment variables or a .env file.
    All environment variables are prefixed with QUIVER_COHOMOLOGY_.
    """

    model_config = SettingsConfigDict(
        env_prefix="QUIVER_COHOMOLOGY_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging Settings
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="WARNING",
        description="Logging level",
    )
    log_format: Literal["json", "console"] = Field(
        default="console",
        description="Log output format (json for machine consumption, console for humans)",
    )

    # Cache Settings
    cache_enabled: bool = Field(
        default=True,
        description="Memoize differential matrices, hat matrices and lifting chains",
    )
    cache_max_size: int = Field(
        default=4096,
        ge=16,
        le=100_000,
        description="Maximum number of cached computation results",
    )

    # Computation Settings
    max_concurrency: int = Field(
        default=4,
        ge=1,
        le=64,
        description="Maximum number of degrees evaluated concurrently",
    )
    default_characteristic: int = Field(
        default=0,
        ge=0,
        description="Field characteristic used when --char is omitted (0 or a prime)",
    )
    default_output_format: Literal["text", "json", "csv"] = Field(
        default="text",
        description="Output format used when --format is omitted",
    )
    recursion_check_max_degree: int = Field(
        default=12,
        ge=1,
        le=16,
        description="Highest degree for which word expansions of the generator sets are built",
    )
    presentation_max_power: int = Field(
        default=3,
        ge=1,
        le=4,
        description="Highest power of the ring generators checked by ring-check",
    )
    nilpotence_max_power: int = Field(
        default=3,
        ge=2,
        le=6,
        description="Highest power tried when probing nilpotence of a class",
    )
    lifting_steps_margin: int = Field(
        default=0,
        ge=0,
        le=8,
        description="Extra lifting steps computed beyond those a product needs",
    )

    @field_validator("default_characteristic")
    @classmethod
    def validate_characteristic(cls, v: int) -> int:
        """Characteristic must be 0 or prime."""
        if v != 0 and not isprime(v):
            raise ValueError("Characteristic must be 0 or a prime number")
        return v


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get cached application settings.

    Returns:
        Settings: The application settings instance.
    """
    return Settings()
