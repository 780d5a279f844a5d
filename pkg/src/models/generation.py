"""Models for random text generation and variant ingestion."""

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.models.eds import check_letters


class IntRange(BaseModel):
    """Inclusive integer range, written ``A..B`` (or ``A``) on the command line."""

    model_config = ConfigDict(frozen=True)

    low: int = Field(..., ge=0)
    high: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _ordered(self) -> "IntRange":
        if self.low > self.high:
            raise ValueError(f"empty range {self.low}..{self.high}")
        return self

    @classmethod
    def parse(cls, value: "str | int | IntRange") -> "IntRange":
        if isinstance(value, IntRange):
            return value
        if isinstance(value, int):
            return cls(low=value, high=value)
        low, sep, high = value.partition("..")
        try:
            return cls(low=int(low), high=int(high if sep else low))
        except ValueError as e:
            raise ValueError(f"invalid range {value!r}: expected A..B") from e


class GeneratorParams(BaseModel):
    """Shape of random texts produced by ``generate_random``."""

    k: IntRange = IntRange(low=1, high=5)
    seed_length: IntRange = IntRange(low=0, high=5)
    alternatives: IntRange = IntRange(low=1, high=4)
    alternative_length: IntRange = IntRange(low=0, high=5)
    sigma: int = Field(default=4, ge=1, le=26)
    empty_probability: float = Field(default=0.0, ge=0.0, le=1.0)

    @field_validator("k", "seed_length", "alternatives", "alternative_length", mode="before")
    @classmethod
    def _coerce_range(cls, value):
        return IntRange.parse(value)


class Variant(BaseModel):
    """One variant site: ``ref`` at 1-based ``pos`` may be replaced by any of ``alts``."""

    model_config = ConfigDict(frozen=True)

    pos: int = Field(..., ge=1)
    ref: bytes
    alts: tuple[bytes, ...] = Field(..., min_length=1)

    @field_validator("ref")
    @classmethod
    def _ref_in_alphabet(cls, value: bytes) -> bytes:
        return check_letters(value, "ref")

    @field_validator("alts")
    @classmethod
    def _alts_in_alphabet(cls, value: tuple[bytes, ...]) -> tuple[bytes, ...]:
        for alt in value:
            check_letters(alt, "alt")
        return value

    @property
    def end(self) -> int:
        """Last reference position covered (pos - 1 for an insertion)."""
        return self.pos + len(self.ref) - 1
