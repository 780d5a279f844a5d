"""Elastic-degenerate text models."""

from collections.abc import Sequence
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# Printable ASCII except space and the brace syntax characters.
PERMITTED_LETTERS: bytes = bytes(c for c in range(0x21, 0x7F) if c not in b"{},")
ALPHABET: frozenset[int] = frozenset(PERMITTED_LETTERS)

Seed = bytes


def find_invalid_letter(data: bytes) -> int | None:
    """Return the index of the first byte of ``data`` outside the alphabet, or None."""
    if not data.translate(None, PERMITTED_LETTERS):
        return None
    for index, letter in enumerate(data):
        if letter not in ALPHABET:
            return index
    return None


def check_letters(data: bytes, what: str) -> bytes:
    index = find_invalid_letter(data)
    if index is not None:
        raise ValueError(f"{what} contains byte {data[index]!r} outside the alphabet")
    return data


class PositionKind(str, Enum):
    """Kind of a text position."""

    SOLID = "solid"
    DEGENERATE = "degenerate"


class OccurrenceCase(str, Enum):
    """How an occurrence sits relative to seeds and symbols."""

    IN_SEED = "in_seed"
    IN_SYMBOL = "in_symbol"
    SOLID_START = "solid_start"
    DEGENERATE_START = "degenerate_start"


class DegenerateSymbol(BaseModel):
    """One text position holding a non-empty list of alternative strings."""

    model_config = ConfigDict(frozen=True)

    alternatives: tuple[bytes, ...] = Field(..., min_length=1)

    @field_validator("alternatives")
    @classmethod
    def _alternatives_in_alphabet(cls, value: tuple[bytes, ...]) -> tuple[bytes, ...]:
        for alternative in value:
            check_letters(alternative, "alternative")
        if value == (b"",):
            raise ValueError("a symbol cannot consist of a single empty alternative")
        return value

    @property
    def min_length(self) -> int:
        return min(len(a) for a in self.alternatives)

    @property
    def max_length(self) -> int:
        return max(len(a) for a in self.alternatives)

    @property
    def is_singleton(self) -> bool:
        return len(self.alternatives) == 1


class EdsText(BaseModel):
    """An elastic-degenerate text S1 e1 S2 ... e(k-1) Sk."""

    model_config = ConfigDict(frozen=True)

    seeds: tuple[bytes, ...] = Field(..., min_length=1)
    symbols: tuple[DegenerateSymbol, ...] = ()

    @field_validator("seeds")
    @classmethod
    def _seeds_in_alphabet(cls, value: tuple[bytes, ...]) -> tuple[bytes, ...]:
        for seed in value:
            check_letters(seed, "seed")
        return value

    @model_validator(mode="after")
    def _symbols_interleave_seeds(self) -> "EdsText":
        if len(self.symbols) != len(self.seeds) - 1:
            raise ValueError(
                f"{len(self.seeds)} seeds need {len(self.seeds) - 1} symbols, "
                f"got {len(self.symbols)}"
            )
        return self

    @classmethod
    def build(
        cls, seeds: Sequence[bytes], symbols: Sequence[Sequence[bytes]] = ()
    ) -> "EdsText":
        """Construct a text from raw seeds and alternative lists."""
        return cls(
            seeds=tuple(seeds),
            symbols=tuple(DegenerateSymbol(alternatives=tuple(alts)) for alts in symbols),
        )

    @property
    def k(self) -> int:
        return len(self.seeds)

    @property
    def length(self) -> int:
        """Seed letters plus one position per symbol (n)."""
        return sum(len(s) for s in self.seeds) + len(self.symbols)

    @property
    def total_size(self) -> int:
        """Seed letters plus every alternative's letters (N)."""
        return sum(len(s) for s in self.seeds) + sum(
            len(a) for symbol in self.symbols for a in symbol.alternatives
        )


class PositionInfo(BaseModel):
    """What sits at one 1-based text position."""

    model_config = ConfigDict(frozen=True)

    position: int = Field(..., ge=1)
    kind: PositionKind
    segment_index: int = Field(..., ge=1, description="1-based seed or symbol index")
    local_offset: int | None = Field(default=None, description="1-based offset in the seed")


class TextStats(BaseModel):
    """Size characteristics of a text."""

    n: int
    N: int
    k: int
    alpha: int
    alternatives_total: int
    singleton_symbols: int = 0


class Occurrence(BaseModel):
    """A (head, tail) pair in text coordinates."""

    model_config = ConfigDict(frozen=True)

    head: int = Field(..., ge=1)
    tail: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _head_not_after_tail(self) -> "Occurrence":
        if self.head > self.tail:
            raise ValueError(f"head {self.head} is after tail {self.tail}")
        return self

    def as_tuple(self) -> tuple[int, int]:
        return (self.head, self.tail)
