"""Shared texts and patterns for the test suites."""

import os

import pytest

from src.config import get_settings
from src.services.eds_format import parse_eds

THREE_SEED_TEXT = b"abbc{ab,aab,acca}cca{aabcab,cba}bb"

CROSSING_TEXT = b"aacabbcbbc{a,aab,acca}bb{c,acabbcbb,cba}bacabbc{b,cabb,bbc,aacabb}cbc"
CROSSING_PATTERN = b"cabbcb"
# Every occurrence of CROSSING_PATTERN, including (10, 14) via {a} and {cba}.
CROSSING_OCCURRENCES = [
    (3, 8),
    (10, 14),
    (10, 15),
    (11, 14),
    (11, 15),
    (14, 14),
    (17, 22),
    (22, 24),
]

EMPTY_SEED_TEXT = b"ab{bcab,abb}{ab,cbb,abc}cca{bb,cb}ca"
EMPTY_SEED_PATTERN = b"babbcb"


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Keep EDS_* variables from the developer's shell out of the tests."""
    for name in list(os.environ):
        if name.startswith("EDS_"):
            monkeypatch.delenv(name)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def three_seed_text():
    return parse_eds(THREE_SEED_TEXT)


@pytest.fixture
def crossing_text():
    return parse_eds(CROSSING_TEXT)


@pytest.fixture
def empty_seed_text():
    return parse_eds(EMPTY_SEED_TEXT)
