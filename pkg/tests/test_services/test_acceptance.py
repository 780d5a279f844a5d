"""Cross-checks of the matcher against brute force on random texts."""

import numpy as np
import pytest

from src.errors import GeneratorError
from src.models import GeneratorParams
from src.services.benchmark import DEFAULT_PARAMS, measure_scaling
from src.services.generator import generate_random, sample_pattern
from src.services.matcher import search, verify_occurrence
from src.services.naive_oracle import naive_occurrences


def random_instance(rng: np.random.Generator, seed: int):
    sigma = int(rng.integers(2, 5))
    params = GeneratorParams(
        k="1..5",
        seed_length="0..5",
        alternatives="1..4",
        alternative_length="0..5",
        sigma=sigma,
        empty_probability=0.1,
    )
    text = generate_random(params, seed)
    m = int(rng.integers(1, 9))
    pattern = None
    if rng.random() < 0.5:
        try:
            pattern = sample_pattern(text, m, rng)
        except GeneratorError:
            pass
    if pattern is None:
        alphabet = np.frombuffer(b"abcd"[:sigma], dtype=np.uint8)
        pattern = alphabet[rng.integers(0, sigma, size=m)].tobytes()
    return pattern, text


class TestAgainstBruteForce:
    """Test suite comparing search with full expansion."""

    def setup_method(self):
        """Set up a seeded random source."""
        self.rng = np.random.default_rng(2024)

    def test_random_instances(self):
        """Test 1000 random texts and patterns for identical occurrence sets."""
        for seed in range(1000):
            pattern, text = random_instance(self.rng, seed)
            report = search(pattern, text)

            assert report.occurrences == naive_occurrences(pattern, text), (pattern, text)
            assert report.max_extend_depth <= max(text.k - 1, 0)

    def test_reported_occurrences_verify(self):
        """Test that every reported occurrence has a witness."""
        for seed in range(200):
            pattern, text = random_instance(self.rng, seed)

            for occurrence in search(pattern, text).occurrences:
                assert verify_occurrence(pattern, text, occurrence).ok, (pattern, text, occurrence)

    def test_scan_threshold_does_not_change_results(self):
        """Test that direct scans and oracle queries agree."""
        for seed in range(200):
            pattern, text = random_instance(self.rng, seed)

            assert search(pattern, text, scan_threshold=0) == search(
                pattern, text, scan_threshold=1_000
            )


@pytest.mark.slow
class TestScaling:
    """Test suite for near-linear runtime growth."""

    def test_doubling_size(self):
        """Test that doubling N roughly doubles search time."""
        report = measure_scaling([500_000, 1_000_000], DEFAULT_PARAMS, pattern_length=32)

        assert 1.2 <= report.ratios[0] <= 3.5
        for sample in report.samples:
            assert sample.max_extend_depth <= sample.k - 1
