"""eds-match: solid-pattern search in elastic-degenerate texts."""

__version__ = "0.1.0"
