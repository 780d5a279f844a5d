"""Search results, oracle expansions and benchmark records."""

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.eds import Occurrence, OccurrenceCase


class MatchReport(BaseModel):
    """Occurrences of a pattern in a text plus search counters."""

    occurrences: list[Occurrence] = []
    gamma: int = Field(default=0, description="Max symbols spanned by any occurrence")
    heads_tested: int = 0
    extend_calls: int = 0
    max_extend_depth: int = 0
    cases: dict[OccurrenceCase, int] = {}

    @model_validator(mode="after")
    def _strictly_sorted(self) -> "MatchReport":
        pairs = [o.as_tuple() for o in self.occurrences]
        if any(a >= b for a, b in zip(pairs, pairs[1:])):
            raise ValueError("occurrences must be strictly increasing by (head, tail)")
        return self

    def pairs(self) -> list[tuple[int, int]]:
        return [o.as_tuple() for o in self.occurrences]


class MatchDocument(BaseModel):
    """Structured output of the ``match`` command."""

    occurrences: list[tuple[int, int]]
    n: int
    N: int
    k: int
    alpha: int
    gamma: int
    cases: dict[str, int]


class VerifyResult(BaseModel):
    """Outcome of checking one occurrence against the definition."""

    ok: bool
    witness: dict[int, bytes] = Field(
        default_factory=dict, description="1-based symbol index -> chosen alternative"
    )


class ExpansionBudget(BaseModel):
    """Caps on possibility-set expansion."""

    model_config = ConfigDict(frozen=True)

    max_strings: int = Field(default=10_000, gt=0)
    max_total_letters: int = Field(default=10_000_000, gt=0)


class ExpandedString(BaseModel):
    """One member of the possibility set with each letter's text position."""

    model_config = ConfigDict(frozen=True)

    letters: bytes
    coord_map: tuple[int, ...]

    @model_validator(mode="after")
    def _coordinates_align(self) -> "ExpandedString":
        if len(self.coord_map) != len(self.letters):
            raise ValueError("coord_map must have one entry per letter")
        if any(a > b for a, b in zip(self.coord_map, self.coord_map[1:])):
            raise ValueError("coord_map must be non-decreasing")
        return self


class ScalingSample(BaseModel):
    """Timing of one search over a random text."""

    total_size: int
    k: int
    seconds: float
    occurrences: int
    max_extend_depth: int


class ScalingReport(BaseModel):
    """Timings over increasing text sizes."""

    samples: list[ScalingSample]
    ratios: list[float] = []
    slope: float | None = Field(default=None, description="log-log slope of seconds vs N")
