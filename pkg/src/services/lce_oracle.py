"""Longest-common-extension queries between pattern suffixes and reference strings.

The pattern and every reference are joined into one integer sequence with a
distinct separator after each string (letters are 0-255, separators 256 and
up), so no common extension crosses a string boundary. A prefix-doubling
suffix array, its LCP array and a sparse table over the LCP array answer each
query with one range minimum.
"""

import logging
import time
from collections.abc import Sequence

import numpy as np

from src.config import get_settings
from src.errors import PositionError

logger = logging.getLogger(__name__)

_SEPARATOR_BASE = 256


def _doubling_ranks(values: np.ndarray) -> list[np.ndarray]:
    """Rank arrays of the substrings of length 1, 2, 4, ... starting at each index.

    The last array holds distinct ranks, i.e. it is the inverse suffix array.
    """
    n = len(values)
    rank = np.unique(values, return_inverse=True)[1].astype(np.int64).reshape(-1)
    levels = [rank]
    width = 1
    while n and rank.max() < n - 1:
        second = np.zeros(n, dtype=np.int64)
        if width < n:
            second[: n - width] = rank[width:] + 1
        order = np.lexsort((second, rank))
        changed = (np.diff(rank[order]) != 0) | (np.diff(second[order]) != 0)
        rank = np.empty(n, dtype=np.int64)
        rank[order] = np.concatenate(([0], np.cumsum(changed)))
        levels.append(rank)
        width *= 2
    return levels


def _invert(rank: np.ndarray) -> np.ndarray:
    suffix_array = np.empty_like(rank)
    suffix_array[rank] = np.arange(len(rank))
    return suffix_array


def build_suffix_array(values: np.ndarray) -> np.ndarray:
    """Start indices of the suffixes of ``values`` in lexicographic order."""
    if len(values) == 0:
        return np.zeros(0, dtype=np.int64)
    return _invert(_doubling_ranks(values)[-1])


def build_lcp_array(suffix_array: np.ndarray, levels: list[np.ndarray]) -> np.ndarray:
    """``lcp[r]`` is the common prefix length of the suffixes ranked r - 1 and r (lcp[0] = 0).

    Adjacent pairs are extended together by binary lifting over the doubling
    ranks: two suffixes share 2**j letters iff their level-j ranks agree.
    """
    n = len(suffix_array)
    lcp = np.zeros(n, dtype=np.int64)
    if n < 2:
        return lcp
    left = suffix_array[:-1].copy()
    right = suffix_array[1:].copy()
    shared = np.zeros(n - 1, dtype=np.int64)
    for level in range(len(levels) - 1, -1, -1):
        width = 1 << level
        ranks = levels[level]
        inside = (left < n) & (right < n)
        same = inside & (
            ranks[np.minimum(left, n - 1)] == ranks[np.minimum(right, n - 1)]
        )
        step = same.astype(np.int64) * width
        shared += step
        left += step
        right += step
    lcp[1:] = shared
    return lcp


def _sparse_table(values: np.ndarray) -> list[np.ndarray]:
    """``table[j][i]`` = min(values[i : i + 2**j])."""
    table = [values.astype(np.int32)]
    width = 1
    while 2 * width <= len(values):
        previous = table[-1]
        table.append(np.minimum(previous[:-width], previous[width:]))
        width *= 2
    return table


class LceOracle:
    """Exact LCE between suffixes of one pattern and suffixes of indexed references."""

    def __init__(
        self,
        pattern: bytes,
        refs: Sequence[bytes],
        rank: np.ndarray,
        table: list[np.ndarray],
        ref_starts: list[int],
        scan_threshold: int,
    ):
        self.pattern = pattern
        self.refs = list(refs)
        self._rank = rank
        self._table = table
        self._ref_starts = ref_starts
        self._scan_threshold = scan_threshold

    @classmethod
    def build(
        cls, pattern: bytes, refs: Sequence[bytes], scan_threshold: int | None = None
    ) -> "LceOracle":
        """Index ``pattern`` and ``refs`` in O((m + N) log(m + N)) time."""
        if scan_threshold is None:
            scan_threshold = get_settings().lce_scan_threshold
        started = time.perf_counter()

        parts = [np.frombuffer(pattern, dtype=np.uint8).astype(np.int64), [_SEPARATOR_BASE]]
        ref_starts = []
        offset = len(pattern) + 1
        for ref_id, ref in enumerate(refs):
            ref_starts.append(offset)
            parts.append(np.frombuffer(ref, dtype=np.uint8).astype(np.int64))
            parts.append([_SEPARATOR_BASE + 1 + ref_id])
            offset += len(ref) + 1
        values = np.concatenate([np.asarray(p, dtype=np.int64) for p in parts])

        levels = _doubling_ranks(values)
        rank = levels[-1]
        lcp = build_lcp_array(_invert(rank), levels)
        table = _sparse_table(lcp)

        logger.info(
            f"LCE oracle built over {len(values)} symbols "
            f"({len(refs)} refs) in {time.perf_counter() - started:.3f}s"
        )
        return cls(pattern, refs, rank, table, ref_starts, scan_threshold)

    def _range_min(self, i: int, j: int) -> int:
        low, high = int(self._rank[i]), int(self._rank[j])
        if low > high:
            low, high = high, low
        low += 1
        level = (high - low + 1).bit_length() - 1
        row = self._table[level]
        return int(min(row[low], row[high - (1 << level) + 1]))

    def common_prefix(self, offset: int, ref_id: int, ref_offset: int = 0) -> int:
        """LCE of ``pattern[offset:]`` and ``refs[ref_id][ref_offset:]`` with 0-based offsets."""
        ref = self.refs[ref_id]
        limit = min(len(self.pattern) - offset, len(ref) - ref_offset)
        if limit <= 0:
            return 0
        if len(ref) < self._scan_threshold:
            pattern = self.pattern
            length = 0
            while length < limit and pattern[offset + length] == ref[ref_offset + length]:
                length += 1
            return length
        return min(self._range_min(offset, self._ref_starts[ref_id] + ref_offset), limit)

    def lce(self, pattern_pos: int, ref_id: int, ref_pos: int) -> int:
        """LCE of P[pattern_pos..m] and ref[ref_pos..] with 1-based positions.

        ``pattern_pos == m + 1`` and ``ref_pos == len(ref) + 1`` denote empty suffixes.

        Raises:
            PositionError: On an unknown ref id or an out-of-range position.
        """
        if not 0 <= ref_id < len(self.refs):
            raise PositionError(f"unknown ref id {ref_id}")
        if not 1 <= pattern_pos <= len(self.pattern) + 1:
            raise PositionError(
                f"pattern position {pattern_pos} outside [1, {len(self.pattern) + 1}]"
            )
        ref_length = len(self.refs[ref_id])
        if not 1 <= ref_pos <= ref_length + 1:
            raise PositionError(f"ref position {ref_pos} outside [1, {ref_length + 1}]")
        return self.common_prefix(pattern_pos - 1, ref_id, ref_pos - 1)
