"""Brute-force occurrences through full expansion of the possibility set."""

import itertools
import logging
import math

from src.config import get_settings
from src.errors import BudgetExceededError
from src.models.eds import EdsText, Occurrence
from src.models.matching import ExpandedString, ExpansionBudget
from src.services.coordinates import TextLayout
from src.services.kmp import check_pattern

logger = logging.getLogger(__name__)


def default_budget() -> ExpansionBudget:
    settings = get_settings()
    return ExpansionBudget(
        max_strings=settings.oracle_max_strings,
        max_total_letters=settings.oracle_max_letters,
    )


def _check_budget(text: EdsText, budget: ExpansionBudget) -> None:
    product = math.prod(len(s.alternatives) for s in text.symbols)
    if product > budget.max_strings:
        logger.warning(f"Expansion refused: {product} strings > {budget.max_strings}")
        raise BudgetExceededError(
            f"possibility set has {product} strings, budget is {budget.max_strings}",
            product=product,
            limit=budget.max_strings,
        )
    # each alternative of symbol i appears in product / |symbol i| strings
    letters = product * sum(len(seed) for seed in text.seeds)
    for symbol in text.symbols:
        share = product // len(symbol.alternatives)
        letters += share * sum(len(a) for a in symbol.alternatives)
    if letters > budget.max_total_letters:
        logger.warning(f"Expansion refused: {letters} letters > {budget.max_total_letters}")
        raise BudgetExceededError(
            f"possibility set holds {letters} letters, budget is {budget.max_total_letters}",
            product=letters,
            limit=budget.max_total_letters,
        )


def expand_possibility_set(
    text: EdsText, budget: ExpansionBudget | None = None
) -> list[ExpandedString]:
    """Every string the text can spell, one per choice of alternatives.

    Letters from a seed map to their own position; letters from an alternative
    all map to the position of its symbol. Duplicate alternatives give
    duplicate entries.

    Raises:
        BudgetExceededError: If the expansion exceeds ``budget``.
    """
    budget = budget or default_budget()
    _check_budget(text, budget)
    layout = TextLayout.from_text(text)

    seed_coords = [
        tuple(range(start, start + len(seed)))
        for start, seed in zip(layout.seed_starts, text.seeds)
    ]
    expanded = []
    for choice in itertools.product(*(s.alternatives for s in text.symbols)):
        letters = bytearray(text.seeds[0])
        coords = list(seed_coords[0])
        for index, alt in enumerate(choice):
            letters += alt
            coords.extend([layout.symbol_positions[index]] * len(alt))
            letters += text.seeds[index + 1]
            coords.extend(seed_coords[index + 1])
        expanded.append(ExpandedString(letters=bytes(letters), coord_map=tuple(coords)))
    return expanded


def naive_occurrences(
    pattern: bytes, text: EdsText, budget: ExpansionBudget | None = None
) -> list[Occurrence]:
    """Occurrences found by plain substring search in every expanded string.

    Raises:
        PatternError: On an invalid pattern.
        BudgetExceededError: If the expansion exceeds ``budget``.
    """
    check_pattern(pattern)
    m = len(pattern)
    found: set[tuple[int, int]] = set()
    for expanded in expand_possibility_set(text, budget):
        start = expanded.letters.find(pattern)
        while start != -1:
            found.add((expanded.coord_map[start], expanded.coord_map[start + m - 1]))
            start = expanded.letters.find(pattern, start + 1)
    return [Occurrence(head=h, tail=t) for h, t in sorted(found)]
