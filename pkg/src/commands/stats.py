"""``stats``: size characteristics of a text."""

from src.commands.dependencies import EXIT_OK, load_text
from src.models.cli import CliConfig, OutputFormat
from src.services.coordinates import stats


def cmd_stats(config: CliConfig) -> int:
    text_stats = stats(load_text(config.text))
    if config.output_format is OutputFormat.JSON:
        print(text_stats.model_dump_json())
        return EXIT_OK
    print(f"n={text_stats.n}")
    print(f"N={text_stats.N}")
    print(f"k={text_stats.k}")
    print(f"alpha={text_stats.alpha}")
    return EXIT_OK
