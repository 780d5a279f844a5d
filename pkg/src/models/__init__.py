"""Pydantic models for eds-match."""

from src.models.eds import (
    ALPHABET,
    PERMITTED_LETTERS,
    DegenerateSymbol,
    EdsText,
    Occurrence,
    OccurrenceCase,
    PositionInfo,
    PositionKind,
    Seed,
    TextStats,
    find_invalid_letter,
)
from src.models.generation import GeneratorParams, IntRange, Variant
from src.models.matching import (
    ExpandedString,
    ExpansionBudget,
    MatchDocument,
    MatchReport,
    ScalingReport,
    ScalingSample,
    VerifyResult,
)

__all__ = [
    # Text models
    "ALPHABET",
    "PERMITTED_LETTERS",
    "Seed",
    "DegenerateSymbol",
    "EdsText",
    "PositionKind",
    "PositionInfo",
    "TextStats",
    "Occurrence",
    "OccurrenceCase",
    "find_invalid_letter",
    # Generation models
    "IntRange",
    "GeneratorParams",
    "Variant",
    # Matching models
    "MatchReport",
    "MatchDocument",
    "VerifyResult",
    "ExpansionBudget",
    "ExpandedString",
    "ScalingSample",
    "ScalingReport",
]
