"""Input and output helpers shared by the subcommands."""

import logging
import sys
from pathlib import Path

from src.models.eds import EdsText
from src.services.coordinates import stats
from src.services.eds_format import parse_eds
from src.services.kmp import check_pattern

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


def read_source(source: str) -> bytes:
    """Bytes of a file, or of stdin for ``-``."""
    if source == "-":
        return sys.stdin.buffer.read()
    return Path(source).read_bytes()


def read_pattern(source: str) -> bytes:
    """An inline pattern, or ``@path`` for a file whose single trailing newline is dropped.

    Raises:
        PatternError: If the pattern is empty or holds any other whitespace.
    """
    if source.startswith("@"):
        pattern = Path(source[1:]).read_bytes()
        if pattern.endswith(b"\r\n"):
            pattern = pattern[:-2]
        elif pattern.endswith(b"\n"):
            pattern = pattern[:-1]
    else:
        pattern = source.encode()
    return check_pattern(pattern)


def load_text(source: str) -> EdsText:
    """Parse an EDS text and warn about symbols with a single alternative."""
    text = parse_eds(read_source(source))
    text_stats = stats(text)
    logger.info(f"Loaded text: k={text_stats.k}, n={text_stats.n}, N={text_stats.N}")
    if text_stats.singleton_symbols:
        logger.warning(
            f"{text_stats.singleton_symbols} symbol(s) have a single alternative"
        )
    return text


def write_output(destination: str, data: bytes) -> None:
    if destination == "-":
        sys.stdout.write(data.decode("ascii"))
    else:
        Path(destination).write_bytes(data)
