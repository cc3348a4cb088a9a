"""
Configuration schemas for beam-compact.

This module defines Pydantic models for experiment configuration (problem
source, mesh ladders, time-step rule, output) and the environment-driven
application settings.
"""

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, PositiveFloat, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from exprcalc import parse
from schemas.examples import EXAMPLES, builtin_problem
from schemas.models import BeamProblem

_DATA_FIELDS = ("xi1", "xi2", "mu0", "mu1", "mu2", "mu3", "f")


class CustomProblemConfig(BaseModel):
    """A problem given by expression strings in x and t."""

    u_exact: str | None = Field(
        default=None,
        description="Exact solution; when given, unspecified data are derived from it",
    )
    xi1: str | None = Field(default=None, description="Initial displacement u(x, 0)")
    xi2: str | None = Field(default=None, description="Initial velocity u_t(x, 0)")
    mu0: str | None = Field(default=None, description="Displacement at x = 0")
    mu1: str | None = Field(default=None, description="Displacement at x = L")
    mu2: str | None = Field(default=None, description="u_xx at x = 0")
    mu3: str | None = Field(default=None, description="u_xx at x = L")
    f: str | None = Field(default=None, description="Distributed load")

    EI: PositiveFloat = Field(..., description="Flexural rigidity")
    rho: PositiveFloat = Field(..., description="Linear density")
    c: float = Field(..., ge=0, description="Damping coefficient")
    length: PositiveFloat = Field(default=1.0, description="Beam length")
    final_time: PositiveFloat = Field(default=1.0, description="Simulated time")

    @field_validator("u_exact", *_DATA_FIELDS)
    @classmethod
    def check_expression(cls, value: str | None) -> str | None:
        """Parse eagerly so syntax errors carry the field path and byte offset."""
        if value is not None:
            parse(value)
        return value

    @model_validator(mode="after")
    def check_complete(self) -> "CustomProblemConfig":
        """Without an exact solution every data expression is required."""
        if self.u_exact is None:
            missing = [name for name in _DATA_FIELDS if getattr(self, name) is None]
            if missing:
                raise ValueError(f"u_exact absent, so {', '.join(missing)} must be given")
        return self

    def to_problem(self) -> BeamProblem:
        """Build the problem; explicit data override those derived from u_exact."""
        overrides = {
            name: parse(text) for name in _DATA_FIELDS if (text := getattr(self, name)) is not None
        }
        if self.u_exact is None:
            return BeamProblem(
                EI=self.EI,
                rho=self.rho,
                c=self.c,
                length=self.length,
                final_time=self.final_time,
                **overrides,
            )
        derived = BeamProblem.from_exact(
            self.u_exact, self.EI, self.rho, self.c, self.length, self.final_time
        )
        if not overrides:
            return derived
        return BeamProblem.model_validate({**dict(derived), **overrides})


class ProblemSource(BaseModel):
    """Exactly one of a built-in example id or a custom problem."""

    example: int | None = Field(default=None, description="Built-in example id")
    custom: CustomProblemConfig | None = Field(default=None, description="Custom problem")

    @field_validator("example")
    @classmethod
    def check_example(cls, value: int | None) -> int | None:
        if value is not None and value not in EXAMPLES:
            raise ValueError(f"example must be one of {sorted(EXAMPLES)}, got {value}")
        return value

    @model_validator(mode="after")
    def check_exactly_one(self) -> "ProblemSource":
        if (self.example is None) == (self.custom is None):
            raise ValueError("give exactly one of 'example' or 'custom'")
        return self

    def to_problem(self) -> BeamProblem:
        if self.example is not None:
            return builtin_problem(self.example)
        assert self.custom is not None
        return self.custom.to_problem()


class RunConfig(BaseModel):
    """Configuration for one command-line experiment."""

    command: Literal["solve", "converge", "stability", "consistency"] = Field(
        ..., description="Experiment to run"
    )
    problem: ProblemSource = Field(..., description="Problem definition")
    ladder: list[int] = Field(
        default_factory=list, description="Spatial mesh ladder (Nx values)"
    )
    nt_ladder: list[int] = Field(
        default_factory=list, description="Time-step ladder (Nt values) at fixed nx"
    )
    dt: Literal["h2"] | PositiveFloat = Field(
        default="h2", description="Time step, or 'h2' for the dt = h^2 coupling"
    )
    t_eval: PositiveFloat | None = Field(
        default=None, description="Evaluation time; defaults to the problem's final time"
    )
    nx: int | None = Field(default=None, ge=3, description="Spatial intervals for single runs")
    stride: int | None = Field(
        default=None, ge=1, description="Also record u every this many steps (solve)"
    )
    output: Path | None = Field(default=None, description="CSV path; stdout when omitted")
    output_format: Literal["csv"] = Field(default="csv", description="Artifact format")
    threads: int | None = Field(default=None, ge=1, description="Worker threads for ladders")

    @field_validator("ladder", "nt_ladder")
    @classmethod
    def check_ladder(cls, values: list[int]) -> list[int]:
        if any(v < 1 for v in values):
            raise ValueError(f"ladder entries must be positive, got {values}")
        if len(set(values)) != len(values):
            raise ValueError(f"ladder entries must be distinct, got {values}")
        return values

    @model_validator(mode="after")
    def check_command_inputs(self) -> "RunConfig":
        """Each command needs its own subset of the mesh options."""
        if any(v < 3 for v in self.ladder):
            raise ValueError(f"spatial ladder entries must be >= 3, got {self.ladder}")
        if self.command in ("solve", "stability") and self.nx is None:
            raise ValueError(f"'{self.command}' requires nx")
        if self.command == "converge" and not self.ladder and not self.nt_ladder:
            raise ValueError("'converge' requires a nonempty ladder or nt_ladder")
        if self.command == "consistency" and not self.ladder:
            raise ValueError("'consistency' requires a nonempty ladder")
        if self.nt_ladder and self.nx is None:
            raise ValueError("nt_ladder requires nx")
        custom = self.problem.custom
        needs_exact = self.command in ("converge", "consistency")
        if needs_exact and custom is not None and custom.u_exact is None:
            raise ValueError(f"'{self.command}' requires a problem with u_exact")
        return self


class AppSettings(BaseSettings):
    """Application-wide settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="BEAM_",
        case_sensitive=False,
        extra="ignore",
    )

    threads: int | None = Field(default=None, ge=1, description="Thread-count override")
    log_level: str = Field(default="INFO")
    verify_steps: bool = Field(
        default=False, description="Check the linear-system residual after every step"
    )


# Singleton instance for app settings
_settings: AppSettings | None = None


def get_settings() -> AppSettings:
    """Get the application settings singleton."""
    global _settings
    if _settings is None:
        _settings = AppSettings()
    return _settings
