"""Random elastic-degenerate texts and patterns for tests and benchmarks."""

import logging
import string

import numpy as np

from src.errors import GeneratorError
from src.models.eds import DegenerateSymbol, EdsText
from src.models.generation import GeneratorParams, IntRange

logger = logging.getLogger(__name__)


def _draw(rng: np.random.Generator, bounds: IntRange) -> int:
    return int(rng.integers(bounds.low, bounds.high + 1))


def _letters(rng: np.random.Generator, alphabet: np.ndarray, length: int) -> bytes:
    return alphabet[rng.integers(0, len(alphabet), size=length)].tobytes()


def _check_feasible(params: GeneratorParams) -> None:
    if params.k.low < 1:
        raise GeneratorError("k must be at least 1")
    if params.k.high == 1:
        return
    if params.alternatives.low < 1:
        raise GeneratorError("symbols need at least one alternative")
    if params.alternative_length.high == 0 and params.alternatives.low < 2:
        raise GeneratorError(
            "alternatives of length 0 need at least two alternatives per symbol"
        )


def _non_empty(rng: np.random.Generator, alphabet: np.ndarray, bounds: IntRange) -> bytes:
    return _letters(rng, alphabet, int(rng.integers(max(bounds.low, 1), bounds.high + 1)))


def _alternative(
    rng: np.random.Generator, alphabet: np.ndarray, params: GeneratorParams
) -> bytes:
    bounds = params.alternative_length
    if bounds.high == 0 or rng.random() < params.empty_probability:
        return b""
    return _non_empty(rng, alphabet, bounds)


def generate_random(params: GeneratorParams, rng_seed: int) -> EdsText:
    """Draw a text; the same params and seed always give the same text.

    Letters are the first ``sigma`` lowercase ASCII letters. An alternative is
    empty with probability ``empty_probability``, otherwise its length is drawn
    from the non-zero part of ``alternative_length``. A symbol that would be a
    lone empty alternative gets a non-empty one instead.

    Raises:
        GeneratorError: If no valid text satisfies ``params``.
    """
    _check_feasible(params)
    rng = np.random.default_rng(rng_seed)
    alphabet = np.frombuffer(string.ascii_lowercase[: params.sigma].encode(), dtype=np.uint8)

    k = _draw(rng, params.k)
    seeds = [_letters(rng, alphabet, _draw(rng, params.seed_length)) for _ in range(k)]
    symbols = []
    for _ in range(k - 1):
        count = _draw(rng, params.alternatives)
        alternatives = [_alternative(rng, alphabet, params) for _ in range(count)]
        if alternatives == [b""]:
            alternatives = [_non_empty(rng, alphabet, params.alternative_length)]
        symbols.append(DegenerateSymbol(alternatives=tuple(alternatives)))

    text = EdsText(seeds=tuple(seeds), symbols=tuple(symbols))
    logger.debug(f"Generated text: k={text.k}, N={text.total_size} (seed {rng_seed})")
    return text


def sample_pattern(text: EdsText, length: int, rng: np.random.Generator) -> bytes:
    """Cut a pattern of ``length`` letters from one randomly spelled string of ``text``.

    Raises:
        GeneratorError: If the spelled string is shorter than ``length``.
    """
    parts = [text.seeds[0]]
    for index, symbol in enumerate(text.symbols):
        parts.append(symbol.alternatives[int(rng.integers(len(symbol.alternatives)))])
        parts.append(text.seeds[index + 1])
    spelled = b"".join(parts)
    if length < 1 or len(spelled) < length:
        raise GeneratorError(f"cannot cut {length} letters from a string of {len(spelled)}")
    start = int(rng.integers(0, len(spelled) - length + 1))
    return spelled[start : start + length]
