"""Request schema for CLI commands."""

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import isprime

OutputFormat = Literal["text", "json", "csv"]


class Command(str, Enum):
    """CLI subcommands."""

    DIMS = "dims"
    VERIFY_RESOLUTION = "verify-resolution"
    VERIFY_BASES = "verify-bases"
    YONEDA = "yoneda"
    RING_CHECK = "ring-check"


class RunConfig(BaseModel):
    """One validated CLI invocation."""

    model_config = ConfigDict(frozen=True)

    command: Command = Field(..., description="Subcommand to run")
    s: int = Field(..., ge=1, description="Number of vertices of the quiver")
    characteristic: int = Field(default=0, ge=0, description="0 or a prime")
    max_degree: int | None = Field(
        default=None, ge=1, description="Highest degree N; defaults to 3s+2"
    )
    output_format: OutputFormat = Field(default="text", description="text, json or csv")
    out: Path | None = Field(default=None, description="Write the rendered output here")
    log_level: str | None = Field(default=None, description="Overrides the configured log level")
    max_power: int | None = Field(
        default=None, ge=1, le=4, description="ring-check: highest power of the generators"
    )
    with_theta: bool = Field(
        default=True, description="yoneda: cross-check against the explicit liftings"
    )

    @field_validator("characteristic")
    @classmethod
    def validate_characteristic(cls, v: int) -> int:
        """Characteristic must be 0 or prime."""
        if v != 0 and not isprime(v):
            raise ValueError(f"Characteristic must be 0 or a prime number, got {v}")
        return v

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v: str | None) -> str | None:
        if isinstance(v, str):
            return v.upper().strip()
        return v

    @model_validator(mode="after")
    def default_max_degree(self) -> RunConfig:
        """Fill N = 3s+2 so every residue class mod s is seen for m = 0..3."""
        if self.max_degree is None:
            object.__setattr__(self, "max_degree", 3 * self.s + 2)
        return self

    @property
    def degree_bound(self) -> int:
        assert self.max_degree is not None
        return self.max_degree

    @property
    def formula_checked(self) -> bool:
        """Closed-form cross-checks only exist for s >= 3."""
        return self.s >= 3
