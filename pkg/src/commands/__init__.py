"""Subcommands of the eds-match CLI."""

from src.commands.bench import cmd_bench
from src.commands.check import cmd_check
from src.commands.convert import cmd_convert
from src.commands.dependencies import (
    EXIT_BUDGET,
    EXIT_INVALID,
    EXIT_IO,
    EXIT_MISMATCH,
    EXIT_OK,
)
from src.commands.generate import cmd_generate
from src.commands.match import cmd_match
from src.commands.stats import cmd_stats

COMMANDS = {
    "match": cmd_match,
    "check": cmd_check,
    "stats": cmd_stats,
    "generate": cmd_generate,
    "convert": cmd_convert,
    "bench": cmd_bench,
}

__all__ = [
    "COMMANDS",
    "EXIT_OK",
    "EXIT_IO",
    "EXIT_INVALID",
    "EXIT_BUDGET",
    "EXIT_MISMATCH",
    "cmd_match",
    "cmd_check",
    "cmd_stats",
    "cmd_generate",
    "cmd_convert",
    "cmd_bench",
]
