"""Knuth-Morris-Pratt failure function, streaming state and border chains."""

from dataclasses import dataclass

from src.errors import PatternError
from src.models.eds import find_invalid_letter


@dataclass(frozen=True)
class FailureFunction:
    """Border table of a pattern.

    ``table[i - 1]`` is f(i), the length of the longest proper prefix of the
    pattern that is also a suffix of ``pattern[:i]``.
    """

    pattern: bytes
    table: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.pattern)

    def __call__(self, i: int) -> int:
        return self.table[i - 1] if i else 0

    def advance(self, q: int, letter: int) -> int:
        """KMP transition on integer state; ``q`` must be below m."""
        pattern, table = self.pattern, self.table
        while q and pattern[q] != letter:
            q = table[q - 1]
        if pattern[q] == letter:
            q += 1
        return q

    def scan(self, data: bytes, q: int = 0) -> tuple[int, list[int]]:
        """Feed ``data`` from state ``q``.

        Returns:
            The end state (always below m) and the 1-based end offsets in
            ``data`` of every full match.
        """
        pattern, table = self.pattern, self.table
        m = len(pattern)
        last = table[m - 1]
        ends: list[int] = []
        for index, letter in enumerate(data):
            while q and pattern[q] != letter:
                q = table[q - 1]
            if pattern[q] == letter:
                q += 1
                if q == m:
                    ends.append(index + 1)
                    q = last
        return q, ends


@dataclass(frozen=True)
class KmpState:
    """Length of the longest pattern prefix that is a suffix of the text consumed so far."""

    q: int = 0


def check_pattern(pattern: bytes) -> bytes:
    """Reject empty patterns and letters outside the alphabet.

    Raises:
        PatternError: On either problem.
    """
    if not pattern:
        raise PatternError("pattern must not be empty")
    index = find_invalid_letter(pattern)
    if index is not None:
        raise PatternError(f"pattern byte {pattern[index:index + 1]!r} at offset {index} "
                           "is not a permitted letter")
    return pattern


def build_failure(pattern: bytes) -> FailureFunction:
    """Compute the failure function of a non-empty pattern.

    Raises:
        PatternError: If the pattern is empty or has a letter outside the alphabet.
    """
    check_pattern(pattern)
    table = [0] * len(pattern)
    border = 0
    for i in range(1, len(pattern)):
        while border and pattern[i] != pattern[border]:
            border = table[border - 1]
        if pattern[i] == pattern[border]:
            border += 1
        table[i] = border
    return FailureFunction(pattern=pattern, table=tuple(table))


def step(state: KmpState, failure: FailureFunction, letter: int) -> tuple[KmpState, bool]:
    """Consume one letter.

    A full match returns state m; the following step resumes from f(m) so
    overlapping matches are still found.
    """
    q = state.q
    if q == failure.m:
        q = failure(q)
    q = failure.advance(q, letter)
    return KmpState(q=q), q == failure.m


def find_occurrences(pattern: bytes, text: bytes) -> list[tuple[int, int]]:
    """All 1-based (start, end) alignments where ``pattern`` equals a slice of ``text``."""
    failure = build_failure(pattern)
    _, ends = failure.scan(text)
    return [(end - failure.m + 1, end) for end in ends]


def border_chain(failure: FailureFunction, q: int) -> list[int]:
    """Lengths ``q, f(q), f(f(q)), ...`` down to, but excluding, 0."""
    chain = []
    while q:
        chain.append(q)
        q = failure(q)
    return chain
