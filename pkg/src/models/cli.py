"""Validated command-line configuration."""

from enum import Enum
from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from src.models.generation import GeneratorParams

Command = Literal["match", "check", "stats", "generate", "convert", "bench"]


class OutputFormat(str, Enum):
    PLAIN = "plain"
    JSON = "json"


class CliConfig(BaseModel):
    """One invocation: the subcommand plus everything it reads."""

    command: Command
    pattern: str | None = Field(default=None, description="Inline pattern or @file")
    text: str | None = Field(default=None, description="EDS file path or '-' for stdin")
    output_format: OutputFormat = OutputFormat.PLAIN
    output: str = "-"

    max_strings: int | None = Field(default=None, gt=0)
    max_letters: int | None = Field(default=None, gt=0)

    rng_seed: int | None = None
    generator: GeneratorParams | None = None

    reference: str | None = None
    variants: str | None = None

    sizes: list[int] = []
    pattern_length: int = Field(default=32, ge=1)

    @field_validator("sizes", mode="before")
    @classmethod
    def _split_sizes(cls, value):
        if isinstance(value, str):
            return [int(part) for part in value.split(",") if part.strip()]
        return value

    @model_validator(mode="after")
    def _inputs_present(self) -> "CliConfig":
        if self.command in ("match", "check") and not self.pattern:
            raise ValueError(f"{self.command} needs a pattern (-p)")
        if self.command in ("match", "check", "stats") and not self.text:
            raise ValueError(f"{self.command} needs a text (-t)")
        if self.command == "convert" and not (self.reference and self.variants):
            raise ValueError("convert needs --ref and --vars")
        if self.command == "bench" and not self.sizes:
            raise ValueError("bench needs --sizes")
        if any(size < 1 for size in self.sizes):
            raise ValueError("sizes must be positive")
        return self
