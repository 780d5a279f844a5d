"""Pattern search in elastic-degenerate texts.

Each seed is scanned with KMP from state 0. Alignments that leave a seed are
picked up from the border chain of the seed's end state (solid heads), and
alignments that start inside an alternative from the border chain of that
alternative's end state (degenerate heads). Both hand a set of ticks, pattern
prefix lengths realized exactly at a symbol's right boundary, to ``extend``,
which carries them across the following seeds and symbols with LCE queries.
"""

import logging
from collections import Counter
from collections.abc import Iterator

from src.models.eds import EdsText, Occurrence, OccurrenceCase, PositionInfo, PositionKind
from src.models.matching import MatchReport, VerifyResult
from src.services.coordinates import TextLayout
from src.services.kmp import FailureFunction, border_chain, build_failure, check_pattern
from src.services.lce_oracle import LceOracle

logger = logging.getLogger(__name__)


class TickSet:
    """Matched prefix lengths t in [1, m - 1] ticked at the right boundary of symbol i."""

    def __init__(self, symbol_index: int, m: int):
        self.symbol_index = symbol_index
        self._flags = bytearray(m)
        self._ticked: list[int] = []

    def tick(self, t: int) -> None:
        if not self._flags[t]:
            self._flags[t] = 1
            self._ticked.append(t)

    def __contains__(self, t: int) -> bool:
        return 0 <= t < len(self._flags) and bool(self._flags[t])

    def __iter__(self) -> Iterator[int]:
        return iter(self._ticked)

    def __len__(self) -> int:
        return len(self._ticked)

    def __bool__(self) -> bool:
        return bool(self._ticked)


class SearchRun:
    """State of one search of a pattern over a text.

    Seeds are refs ``0..k-1`` of the oracle; the alternatives of symbol i
    follow in order, listed in ``alternative_ids[i - 1]``.
    """

    def __init__(self, pattern: bytes, text: EdsText, scan_threshold: int | None = None):
        self.pattern = pattern
        self.text = text
        self.failure: FailureFunction = build_failure(pattern)
        self.m = len(pattern)
        self.layout = TextLayout.from_text(text)

        refs = list(text.seeds)
        self.alternative_ids: list[list[int]] = []
        for symbol in text.symbols:
            first = len(refs)
            self.alternative_ids.append(list(range(first, first + len(symbol.alternatives))))
            refs.extend(symbol.alternatives)
        self.oracle = LceOracle.build(pattern, refs, scan_threshold)

        self.occurrences: set[tuple[int, int]] = set()
        self.heads_tested = 0
        self.extend_calls = 0
        self.max_extend_depth = 0

    def report(self, head: int, tail: int) -> None:
        self.occurrences.add((head, tail))

    def scan_seed(self, seed_index: int) -> tuple[list[tuple[int, int]], int]:
        """Report alignments inside seed ``seed_index`` (1-based); return them and the end state."""
        q, ends = self.failure.scan(self.text.seeds[seed_index - 1])
        at = self.layout.seed_position
        found = [(at(seed_index, end - self.m + 1), at(seed_index, end)) for end in ends]
        for head, tail in found:
            self.report(head, tail)
        return found, q

    def process_type1(self, seed_index: int, q: int) -> None:
        """Test every head in seed ``seed_index`` whose suffix is a pattern prefix of length b."""
        if seed_index > len(self.text.symbols):
            return
        symbol_position = self.layout.symbol_position(seed_index)
        alternatives = self.text.symbols[seed_index - 1].alternatives
        ids = self.alternative_ids[seed_index - 1]
        for b in border_chain(self.failure, q):
            self.heads_tested += 1
            head = symbol_position - b
            ticks = TickSet(seed_index, self.m)
            for alt_id, alt in zip(ids, alternatives):
                matched = self.oracle.common_prefix(b, alt_id)
                if matched == self.m - b:
                    self.report(head, symbol_position)
                elif matched == len(alt):
                    ticks.tick(b + len(alt))
            self.extend(ticks, head)

    def process_type2(self, symbol_index: int) -> None:
        """Test the head at symbol ``symbol_index`` (1-based), merging ticks of all alternatives."""
        head = self.layout.symbol_position(symbol_index)
        self.heads_tested += 1
        ticks = TickSet(symbol_index, self.m)
        for alt in self.text.symbols[symbol_index - 1].alternatives:
            q, ends = self.failure.scan(alt)
            if ends:
                self.report(head, head)
            for b in border_chain(self.failure, q):
                ticks.tick(b)
        self.extend(ticks, head)

    def extend(self, ticks: TickSet, head: int) -> None:
        """Carry ticked prefix lengths across the next seed and symbol until none survive."""
        m = self.m
        layout, text, oracle = self.layout, self.text, self.oracle
        depth = 0
        while ticks:
            depth += 1
            self.extend_calls += 1
            i = ticks.symbol_index
            seed = text.seeds[i]
            seed_start = layout.seed_starts[i]
            has_symbol = i < len(text.symbols)
            following = TickSet(i + 1, m)
            for t in ticks:
                matched = oracle.common_prefix(t, i)
                if matched == m - t:
                    self.report(head, seed_start + matched - 1)
                elif matched == len(seed) and has_symbol:
                    e = t + len(seed)
                    symbol_position = layout.symbol_positions[i]
                    for alt_id, alt in zip(self.alternative_ids[i], text.symbols[i].alternatives):
                        extended = oracle.common_prefix(e, alt_id)
                        if extended == m - e:
                            self.report(head, symbol_position)
                        elif extended == len(alt):
                            following.tick(e + len(alt))
            ticks = following
        self.max_extend_depth = max(self.max_extend_depth, depth)

    def execute(self) -> MatchReport:
        for seed_index in range(1, self.text.k + 1):
            _, q = self.scan_seed(seed_index)
            self.process_type1(seed_index, q)
        for symbol_index in range(1, self.text.k):
            self.process_type2(symbol_index)

        ordered = sorted(self.occurrences)
        cases: Counter[OccurrenceCase] = Counter()
        gamma = 0
        for head, tail in ordered:
            cases[self.layout.classify(head, tail)] += 1
            gamma = max(gamma, self.layout.symbols_spanned(head, tail))

        logger.info(
            f"Search finished: {len(ordered)} occurrences, {self.heads_tested} heads, "
            f"{self.extend_calls} extend calls, max depth {self.max_extend_depth}"
        )
        return MatchReport(
            occurrences=[Occurrence(head=h, tail=t) for h, t in ordered],
            gamma=gamma,
            heads_tested=self.heads_tested,
            extend_calls=self.extend_calls,
            max_extend_depth=self.max_extend_depth,
            cases=dict(cases),
        )


def search(pattern: bytes, text: EdsText, scan_threshold: int | None = None) -> MatchReport:
    """Find every occurrence of a solid pattern in an EDS text.

    Args:
        pattern: Non-empty pattern over the alphabet.
        text: The text to search.
        scan_threshold: Refs shorter than this are compared letter by letter
            (defaults to ``Settings.lce_scan_threshold``).

    Returns:
        Occurrences sorted by (head, tail), with gamma and search counters.

    Raises:
        PatternError: If the pattern is empty or has a letter outside the alphabet.
    """
    return SearchRun(pattern, text, scan_threshold).execute()


def eds_matches_solid(text: EdsText, y: bytes) -> bool:
    """Whether ``y`` is one of the strings the text can spell."""
    consumed = {0}
    for index, seed in enumerate(text.seeds):
        consumed = {c + len(seed) for c in consumed if y.startswith(seed, c)}
        if index < len(text.symbols):
            alternatives = text.symbols[index].alternatives
            consumed = {c + len(a) for c in consumed for a in alternatives if y.startswith(a, c)}
        if not consumed:
            return False
    return len(y) in consumed


def verify_occurrence(pattern: bytes, text: EdsText, occurrence: Occurrence) -> VerifyResult:
    """Check an occurrence by searching for a choice of alternatives that realizes it.

    The search walks segments from head to tail (seed i has ordinal 2i - 2,
    symbol i has 2i - 1) carrying the number of pattern letters consumed.
    Every segment strictly between head and tail may consume letters only
    while some are left for the tail.

    Raises:
        PatternError: On an invalid pattern.
        PositionError: If head or tail lies outside the text.
    """
    check_pattern(pattern)
    layout = TextLayout.from_text(text)
    first = layout.position_info(occurrence.head)
    last = layout.position_info(occurrence.tail)
    m = len(pattern)

    def ordinal(info: PositionInfo) -> int:
        if info.kind is PositionKind.SOLID:
            return 2 * info.segment_index - 2
        return 2 * info.segment_index - 1

    head_ordinal, tail_ordinal = ordinal(first), ordinal(last)

    if head_ordinal == tail_ordinal:
        if first.kind is PositionKind.SOLID:
            seed = text.seeds[first.segment_index - 1]
            ok = seed[first.local_offset - 1 : last.local_offset] == pattern
            return VerifyResult(ok=ok)
        for alt in text.symbols[first.segment_index - 1].alternatives:
            if pattern in alt:
                return VerifyResult(ok=True, witness={first.segment_index: alt})
        return VerifyResult(ok=False)

    # (consumed, alternative chosen at the head symbol or None)
    starts: list[tuple[int, bytes | None]] = []
    if first.kind is PositionKind.SOLID:
        piece = text.seeds[first.segment_index - 1][first.local_offset - 1 :]
        if len(piece) < m and pattern.startswith(piece):
            starts.append((len(piece), None))
    else:
        for alt in text.symbols[first.segment_index - 1].alternatives:
            for cut in range(len(alt)):
                piece = alt[cut:]
                if len(piece) < m and pattern.startswith(piece):
                    starts.append((len(piece), alt))

    failed: set[tuple[int, int]] = set()
    choices: dict[int, bytes] = {}

    def walk(position: int, consumed: int) -> bool:
        if (position, consumed) in failed:
            return False
        rest = pattern[consumed:]
        if position == tail_ordinal:
            if last.kind is PositionKind.SOLID:
                seed = text.seeds[last.segment_index - 1]
                return seed[: last.local_offset] == rest
            for alt in text.symbols[last.segment_index - 1].alternatives:
                if alt.startswith(rest):
                    choices[last.segment_index] = alt
                    return True
        elif position % 2 == 0:
            seed = text.seeds[position // 2]
            if consumed + len(seed) < m and pattern.startswith(seed, consumed):
                if walk(position + 1, consumed + len(seed)):
                    return True
        else:
            symbol_index = position // 2 + 1
            for alt in text.symbols[symbol_index - 1].alternatives:
                if consumed + len(alt) < m and pattern.startswith(alt, consumed):
                    choices[symbol_index] = alt
                    if walk(position + 1, consumed + len(alt)):
                        return True
            choices.pop(symbol_index, None)
        failed.add((position, consumed))
        return False

    for consumed, alt in starts:
        if alt is not None:
            choices[first.segment_index] = alt
        if walk(head_ordinal + 1, consumed):
            return VerifyResult(ok=True, witness=dict(sorted(choices.items())))
    return VerifyResult(ok=False)
