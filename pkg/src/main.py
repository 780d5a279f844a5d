"""eds-match command-line entry point."""

import argparse
import logging
import sys

from pydantic import ValidationError

from src.commands import COMMANDS, EXIT_BUDGET, EXIT_INVALID, EXIT_IO
from src.config import get_settings, setup_logging
from src.errors import BudgetExceededError, EdsError
from src.models.cli import CliConfig, OutputFormat
from src.models.generation import GeneratorParams

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eds-match",
        description="Find a solid pattern in an elastic-degenerate text.",
    )
    parser.add_argument("--log-level", default=None, help="Override EDS_LOG_LEVEL.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    match = subparsers.add_parser("match", help="Print every occurrence as head<TAB>tail.")
    match.add_argument("-p", "--pattern", required=True, help="Pattern, or @file.")
    match.add_argument("-t", "--text", required=True, help="EDS file, or - for stdin.")
    match.add_argument("--json", action="store_true", help="Emit one JSON document.")

    check = subparsers.add_parser("check", help="Compare the matcher with brute force.")
    check.add_argument("-p", "--pattern", required=True, help="Pattern, or @file.")
    check.add_argument("-t", "--text", required=True, help="EDS file, or - for stdin.")
    check.add_argument("--max-strings", type=int, default=None)
    check.add_argument("--max-letters", type=int, default=None)

    stats = subparsers.add_parser("stats", help="Print n, N, k and alpha.")
    stats.add_argument("-t", "--text", required=True, help="EDS file, or - for stdin.")
    stats.add_argument("--json", action="store_true")

    generate = subparsers.add_parser("generate", help="Write a random EDS text.")
    generate.add_argument("--seed", type=int, default=None, help="RNG seed.")
    generate.add_argument("--k", default="1..5", help="Seed count range A..B.")
    generate.add_argument("--seed-len", default="0..5", help="Seed length range.")
    generate.add_argument("--alts", default="1..4", help="Alternatives per symbol range.")
    generate.add_argument("--alt-len", default="0..5", help="Alternative length range.")
    generate.add_argument("--sigma", type=int, default=4, help="Alphabet size (1-26).")
    generate.add_argument("--empty-prob", type=float, default=0.0)
    generate.add_argument("-o", "--output", default="-")

    convert = subparsers.add_parser("convert", help="Reference + variants to EDS.")
    convert.add_argument("--ref", required=True, help="Reference sequence file.")
    convert.add_argument("--vars", required=True, help="Variants TSV file.")
    convert.add_argument("-o", "--output", default="-")

    bench = subparsers.add_parser("bench", help="Time searches over growing texts.")
    bench.add_argument("--sizes", required=True, help="Comma-separated total sizes N.")
    bench.add_argument("--pattern-length", type=int, default=32)
    bench.add_argument("--seed", type=int, default=None)
    bench.add_argument("--json", action="store_true")
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    """Validate parsed arguments into a ``CliConfig``."""
    values = vars(args)
    generator = None
    if args.command == "generate":
        generator = GeneratorParams(
            k=args.k,
            seed_length=args.seed_len,
            alternatives=args.alts,
            alternative_length=args.alt_len,
            sigma=args.sigma,
            empty_probability=args.empty_prob,
        )
    return CliConfig(
        command=args.command,
        pattern=values.get("pattern"),
        text=values.get("text"),
        output_format=OutputFormat.JSON if values.get("json") else OutputFormat.PLAIN,
        output=values.get("output") or "-",
        max_strings=values.get("max_strings"),
        max_letters=values.get("max_letters"),
        rng_seed=values.get("seed"),
        generator=generator,
        reference=values.get("ref"),
        variants=values.get("vars"),
        sizes=values.get("sizes") or [],
        pattern_length=values.get("pattern_length") or 32,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level:
        get_settings().log_level = args.log_level
    setup_logging()

    try:
        config = config_from_args(args)
        return COMMANDS[config.command](config)
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (EdsError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as e:
        logger.error(f"I/O failure: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
