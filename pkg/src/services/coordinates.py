"""Position arithmetic and size statistics for elastic-degenerate texts.

Positions are 1-based. Every seed letter is a solid position and every symbol
occupies exactly one degenerate position, so ``a{b,c}d`` has positions 1 (a),
2 (the symbol) and 3 (d).
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from src.errors import PositionError
from src.models.eds import (
    EdsText,
    Occurrence,
    OccurrenceCase,
    PositionInfo,
    PositionKind,
    TextStats,
)


@dataclass(frozen=True)
class TextLayout:
    """Where each seed starts and where each symbol sits."""

    seed_starts: tuple[int, ...]
    symbol_positions: tuple[int, ...]
    n: int

    @classmethod
    def from_text(cls, text: EdsText) -> "TextLayout":
        seed_starts: list[int] = []
        symbol_positions: list[int] = []
        position = 1
        for index, seed in enumerate(text.seeds):
            seed_starts.append(position)
            position += len(seed)
            if index < len(text.symbols):
                symbol_positions.append(position)
                position += 1
        return cls(
            seed_starts=tuple(seed_starts),
            symbol_positions=tuple(symbol_positions),
            n=position - 1,
        )

    def seed_position(self, seed_index: int, offset: int) -> int:
        """Text position of the letter at 1-based ``offset`` in 1-based seed ``seed_index``."""
        return self.seed_starts[seed_index - 1] + offset - 1

    def symbol_position(self, symbol_index: int) -> int:
        return self.symbol_positions[symbol_index - 1]

    def position_info(self, position: int) -> PositionInfo:
        if not 1 <= position <= self.n:
            raise PositionError(f"position {position} outside [1, {self.n}]")
        before = bisect_right(self.symbol_positions, position)
        if before and self.symbol_positions[before - 1] == position:
            return PositionInfo(
                position=position, kind=PositionKind.DEGENERATE, segment_index=before
            )
        return PositionInfo(
            position=position,
            kind=PositionKind.SOLID,
            segment_index=before + 1,
            local_offset=position - self.seed_starts[before] + 1,
        )

    def symbols_spanned(self, head: int, tail: int) -> int:
        return bisect_right(self.symbol_positions, tail) - bisect_left(self.symbol_positions, head)

    def classify(self, head: int, tail: int) -> OccurrenceCase:
        head_info = self.position_info(head)
        if head_info.kind is PositionKind.DEGENERATE:
            return OccurrenceCase.IN_SYMBOL if head == tail else OccurrenceCase.DEGENERATE_START
        if self.symbols_spanned(head, tail) == 0:
            return OccurrenceCase.IN_SEED
        return OccurrenceCase.SOLID_START


def stats(text: EdsText) -> TextStats:
    """Compute n, N, k, alpha and alternative counts."""
    seed_letters = sum(len(s) for s in text.seeds)
    alternative_letters = sum(len(a) for sym in text.symbols for a in sym.alternatives)
    return TextStats(
        n=seed_letters + len(text.symbols),
        N=seed_letters + alternative_letters,
        k=text.k,
        alpha=max((len(sym.alternatives) for sym in text.symbols), default=0),
        alternatives_total=sum(len(sym.alternatives) for sym in text.symbols),
        singleton_symbols=sum(1 for sym in text.symbols if sym.is_singleton),
    )


def position_info(text: EdsText, position: int) -> PositionInfo:
    """Describe the 1-based ``position`` of ``text``.

    Raises:
        PositionError: If ``position`` is outside [1, n].
    """
    return TextLayout.from_text(text).position_info(position)


def classify_occurrence(text: EdsText, occurrence: Occurrence) -> OccurrenceCase:
    return TextLayout.from_text(text).classify(occurrence.head, occurrence.tail)


def symbols_spanned(text: EdsText, occurrence: Occurrence) -> int:
    return TextLayout.from_text(text).symbols_spanned(occurrence.head, occurrence.tail)
