"""Tests for the EDS pattern search."""

import pytest

from src.errors import PatternError
from src.models import EdsText, Occurrence
from src.services.eds_format import parse_eds
from src.services.kmp import find_occurrences
from src.services.matcher import (
    SearchRun,
    TickSet,
    eds_matches_solid,
    search,
    verify_occurrence,
)
from src.services.naive_oracle import naive_occurrences
from tests.conftest import (
    CROSSING_OCCURRENCES,
    CROSSING_PATTERN,
    CROSSING_TEXT,
    EMPTY_SEED_PATTERN,
    EMPTY_SEED_TEXT,
)


class TestSearch:
    """Test suite for search."""

    def test_crossing_text(self, crossing_text):
        """Test the full occurrence set of the crossing text."""
        report = search(CROSSING_PATTERN, crossing_text)

        assert report.pairs() == CROSSING_OCCURRENCES
        assert report.gamma == 2
        assert report.max_extend_depth <= crossing_text.k - 1

    def test_empty_seed(self, empty_seed_text):
        """Test the occurrence that crosses an empty seed."""
        report = search(EMPTY_SEED_PATTERN, empty_seed_text)

        assert (2, 4) in report.pairs()
        assert report.occurrences == naive_occurrences(EMPTY_SEED_PATTERN, empty_seed_text)

    def test_trivial_texts(self):
        """Test single-seed texts."""
        assert search(b"a", parse_eds(b"a")).pairs() == [(1, 1)]
        assert search(b"cabbcb", parse_eds(b"cabbcb")).pairs() == [(1, 6)]
        assert search(b"a", parse_eds(b"b")).pairs() == []

    def test_single_seed_matches_kmp(self):
        """Test that k = 1 reduces to plain string search."""
        seed = b"abaababaabaab"
        text = parse_eds(seed)

        assert search(b"aba", text).pairs() == find_occurrences(b"aba", seed)

    def test_empty_alternative_deletion(self):
        """Test an occurrence that skips a symbol via its empty alternative."""
        report = search(b"ac", parse_eds(b"a{b,}c"))

        assert report.pairs() == [(1, 3)]

    def test_occurrence_inside_alternative(self):
        """Test that a match inside an alternative reports head == tail."""
        report = search(b"bc", parse_eds(b"a{xbcx,y}z"))

        assert report.pairs() == [(2, 2)]

    def test_report_sorted_and_unique(self, crossing_text):
        """Test output discipline."""
        pairs = search(CROSSING_PATTERN, crossing_text).pairs()

        assert pairs == sorted(set(pairs))

    def test_counters(self, crossing_text):
        """Test that search counters are filled in."""
        report = search(CROSSING_PATTERN, crossing_text)

        assert report.heads_tested > 0
        assert report.extend_calls > 0
        assert sum(report.cases.values()) == len(report.occurrences)

    def test_invalid_pattern(self, crossing_text):
        """Test empty and out-of-alphabet patterns."""
        with pytest.raises(PatternError):
            search(b"", crossing_text)
        with pytest.raises(PatternError):
            search(b"a b", crossing_text)


class TestSearchRun:
    """Test suite for the individual search steps on the crossing text."""

    def setup_method(self):
        """Set up a run over the crossing text."""
        self.run = SearchRun(CROSSING_PATTERN, parse_eds(CROSSING_TEXT))

    def test_scan_first_seed(self):
        """Test the in-seed occurrence and the end state of seed 1."""
        found, q = self.run.scan_seed(1)

        assert found == [(3, 8)]
        assert q == 1

    def test_scan_empty_seed(self):
        """Test that an empty seed reports nothing and ends in state 0."""
        run = SearchRun(EMPTY_SEED_PATTERN, parse_eds(EMPTY_SEED_TEXT))

        assert run.scan_seed(2) == ([], 0)

    def test_type1_from_first_seed(self):
        """Test that the head at 10 reaches (10, 14) and (10, 15)."""
        self.run.process_type1(1, 1)

        assert self.run.occurrences == {(10, 14), (10, 15)}

    def test_type1_without_state(self):
        """Test that state 0 tests no head."""
        self.run.process_type1(1, 0)

        assert self.run.heads_tested == 0
        assert not self.run.occurrences

    def test_type2_first_symbol(self):
        """Test the degenerate head at symbol 1."""
        self.run.process_type2(1)

        assert self.run.occurrences == {(11, 14), (11, 15)}

    def test_type2_second_symbol(self):
        """Test the in-alternative occurrence at symbol 2."""
        self.run.process_type2(2)

        assert (14, 14) in self.run.occurrences

    def test_type2_merges_ticks(self):
        """Test that two alternatives ending in cabb give one occurrence."""
        self.run.process_type2(3)

        assert self.run.occurrences == {(22, 24)}

    def test_extend_empty(self):
        """Test that extending no ticks does nothing."""
        self.run.extend(TickSet(1, 6), head=10)

        assert self.run.extend_calls == 0
        assert not self.run.occurrences

    def test_extend_from_tick(self):
        """Test the chain a + bb + c + b from head 10."""
        ticks = TickSet(1, 6)
        ticks.tick(2)
        self.run.extend(ticks, head=10)

        assert (10, 15) in self.run.occurrences
        assert self.run.max_extend_depth == 2


class TestTickSet:
    """Test suite for TickSet."""

    def test_tick_once(self):
        """Test that repeated ticks are stored once."""
        ticks = TickSet(1, 6)
        ticks.tick(4)
        ticks.tick(4)
        ticks.tick(2)

        assert list(ticks) == [4, 2]
        assert len(ticks) == 2
        assert 4 in ticks and 3 not in ticks


class TestEdsMatchesSolid:
    """Test suite for eds_matches_solid."""

    def test_member_strings(self, three_seed_text):
        """Test the member and non-member strings of the three-seed text."""
        assert eds_matches_solid(three_seed_text, b"abbcabccacbabb")
        assert not eds_matches_solid(three_seed_text, b"abbccccca")

    def test_trivial(self):
        """Test a one-letter text."""
        assert eds_matches_solid(parse_eds(b"a"), b"a")
        assert not eds_matches_solid(parse_eds(b"a"), b"aa")

    def test_empty_alternative(self):
        """Test a string spelled with an empty alternative."""
        text = EdsText.build([b"a", b"c"], [[b"b", b""]])

        assert eds_matches_solid(text, b"ac")
        assert eds_matches_solid(text, b"abc")
        assert not eds_matches_solid(text, b"abbc")


class TestVerifyOccurrence:
    """Test suite for verify_occurrence."""

    def test_witness(self, crossing_text):
        """Test that (11, 15) is realized by acca and c."""
        result = verify_occurrence(CROSSING_PATTERN, crossing_text, Occurrence(head=11, tail=15))

        assert result.ok
        assert result.witness == {1: b"acca", 2: b"c"}

    def test_not_an_occurrence(self, crossing_text):
        """Test that (1, 6) is rejected."""
        result = verify_occurrence(CROSSING_PATTERN, crossing_text, Occurrence(head=1, tail=6))

        assert not result.ok

    def test_every_reported_occurrence(self, crossing_text):
        """Test soundness over the crossing text."""
        for occurrence in search(CROSSING_PATTERN, crossing_text).occurrences:
            assert verify_occurrence(CROSSING_PATTERN, crossing_text, occurrence).ok

    def test_in_symbol_witness(self, crossing_text):
        """Test that (14, 14) names the alternative that contains the pattern."""
        result = verify_occurrence(CROSSING_PATTERN, crossing_text, Occurrence(head=14, tail=14))

        assert result.witness == {2: b"acabbcbb"}
