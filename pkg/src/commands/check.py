"""``check``: compare the matcher with the brute-force oracle."""

import logging

from src.commands.dependencies import EXIT_MISMATCH, EXIT_OK, load_text, read_pattern
from src.models.cli import CliConfig
from src.models.matching import ExpansionBudget
from src.services.matcher import search
from src.services.naive_oracle import default_budget, naive_occurrences

logger = logging.getLogger(__name__)


def cmd_check(config: CliConfig) -> int:
    pattern = read_pattern(config.pattern)
    text = load_text(config.text)

    defaults = default_budget()
    budget = ExpansionBudget(
        max_strings=config.max_strings or defaults.max_strings,
        max_total_letters=config.max_letters or defaults.max_total_letters,
    )
    expected = {o.as_tuple() for o in naive_occurrences(pattern, text, budget)}
    found = set(search(pattern, text).pairs())

    if found == expected:
        print(f"ok\t{len(found)}")
        return EXIT_OK

    logger.warning(
        f"Check mismatch: {len(found - expected)} matcher-only, "
        f"{len(expected - found)} oracle-only"
    )
    for head, tail in sorted(found - expected):
        print(f"matcher-only\t{head}\t{tail}")
    for head, tail in sorted(expected - found):
        print(f"oracle-only\t{head}\t{tail}")
    return EXIT_MISMATCH
