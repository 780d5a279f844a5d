"""Tests for the LCE oracle and its suffix structures."""

import numpy as np
import pytest

from src.errors import PositionError
from src.services.lce_oracle import LceOracle, build_suffix_array


def naive_lce(a: bytes, b: bytes) -> int:
    length = 0
    while length < min(len(a), len(b)) and a[length] == b[length]:
        length += 1
    return length


class TestSuffixArray:
    """Test suite for the prefix-doubling suffix array."""

    def setup_method(self):
        """Set up a seeded random source."""
        self.rng = np.random.default_rng(5)

    def test_banana(self):
        """Test a classic word."""
        values = np.frombuffer(b"banana", dtype=np.uint8).astype(np.int64)

        assert build_suffix_array(values).tolist() == [5, 3, 1, 0, 4, 2]

    def test_random_against_sorted_suffixes(self):
        """Test random integer sequences against sorting all suffixes."""
        for _ in range(50):
            values = self.rng.integers(0, 3, size=int(self.rng.integers(1, 60)))
            expected = sorted(range(len(values)), key=lambda i: values[i:].tolist())

            assert build_suffix_array(values).tolist() == expected


class TestLceOracle:
    """Test suite for LceOracle."""

    def setup_method(self):
        """Set up a seeded random source."""
        self.rng = np.random.default_rng(17)

    def test_examples(self):
        """Test hand-checked queries."""
        oracle = LceOracle.build(b"cabbcb", [b"cabb"])

        assert oracle.lce(1, 0, 1) == 4
        assert oracle.lce(7, 0, 1) == 0
        assert LceOracle.build(b"abc", [b"abc"]).lce(1, 0, 1) == 3

    def test_empty_reference(self):
        """Test that queries against an empty ref return 0."""
        oracle = LceOracle.build(b"a", [b""])

        assert oracle.lce(1, 0, 1) == 0
        assert oracle.lce(2, 0, 1) == 0

    def test_out_of_range(self):
        """Test invalid query coordinates."""
        oracle = LceOracle.build(b"ab", [b"ab"])

        with pytest.raises(PositionError):
            oracle.lce(0, 0, 1)
        with pytest.raises(PositionError):
            oracle.lce(4, 0, 1)
        with pytest.raises(PositionError):
            oracle.lce(1, 0, 4)
        with pytest.raises(PositionError):
            oracle.lce(1, 1, 1)

    def test_extension_property(self):
        """Test that a positive LCE shrinks by one when both suffixes advance."""
        pattern = b"abababba"
        ref = b"xababababbab" * 2
        oracle = LceOracle.build(pattern, [ref], scan_threshold=0)
        for i in range(1, len(pattern) + 1):
            for j in range(1, len(ref) + 1):
                value = oracle.lce(i, 0, j)
                if value > 0:
                    assert oracle.lce(i + 1, 0, j + 1) == value - 1

    @pytest.mark.parametrize("threshold", [0, 16])
    def test_random_queries(self, threshold):
        """Test 100000 random queries per threshold against a direct scan."""
        queries = 0
        while queries < 100_000:
            sigma = int(self.rng.integers(1, 4))
            alphabet = np.frombuffer(b"abcd"[:sigma], dtype=np.uint8)
            m = int(self.rng.integers(1, 40))
            pattern = alphabet[self.rng.integers(0, sigma, size=m)].tobytes()
            refs = [
                alphabet[self.rng.integers(0, sigma, size=int(self.rng.integers(0, 50)))].tobytes()
                for _ in range(int(self.rng.integers(1, 12)))
            ]
            oracle = LceOracle.build(pattern, refs, scan_threshold=threshold)

            for _ in range(2_000):
                ref_id = int(self.rng.integers(len(refs)))
                ref = refs[ref_id]
                i = int(self.rng.integers(1, m + 2))
                j = int(self.rng.integers(1, len(ref) + 2))

                assert oracle.lce(i, ref_id, j) == naive_lce(pattern[i - 1:], ref[j - 1:])
            queries += 2_000
