"""``match``: print every occurrence of a pattern."""

import logging

from src.commands.dependencies import EXIT_OK, load_text, read_pattern
from src.models.cli import CliConfig, OutputFormat
from src.models.matching import MatchDocument
from src.services.coordinates import stats
from src.services.matcher import search

logger = logging.getLogger(__name__)


def cmd_match(config: CliConfig) -> int:
    """Print ``head<TAB>tail`` per occurrence, or one JSON document with ``--json``."""
    pattern = read_pattern(config.pattern)
    text = load_text(config.text)
    report = search(pattern, text)

    if config.output_format is OutputFormat.JSON:
        text_stats = stats(text)
        document = MatchDocument(
            occurrences=report.pairs(),
            n=text_stats.n,
            N=text_stats.N,
            k=text_stats.k,
            alpha=text_stats.alpha,
            gamma=report.gamma,
            cases={case.value: count for case, count in sorted(report.cases.items())},
        )
        print(document.model_dump_json())
    else:
        for head, tail in report.pairs():
            print(f"{head}\t{tail}")
    return EXIT_OK
