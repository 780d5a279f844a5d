"""Exception hierarchy for eds-match.

Every error raised on purpose by the library derives from ``EdsError`` so
callers (the CLI in particular) can map whole families to exit codes.
"""


class EdsError(Exception):
    """Base class for all library errors."""


class EdsParseError(EdsError, ValueError):
    """Malformed EDS text; ``offset`` is the 0-based byte offset of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} at offset {offset}"
        super().__init__(message)
        self.offset = offset


class AlphabetError(EdsParseError):
    """A letter outside the permitted alphabet."""


class PositionError(EdsError, IndexError):
    """A text coordinate outside [1, n]."""


class PatternError(EdsError, ValueError):
    """An empty pattern or one containing a letter outside the alphabet."""


class VariantError(EdsError, ValueError):
    """Overlapping, unsorted or inconsistent variant records."""


class GeneratorError(EdsError, ValueError):
    """Random-text parameters that cannot be satisfied."""


class BudgetExceededError(EdsError):
    """Possibility-set expansion would exceed the configured budget."""

    def __init__(self, message: str, product: int, limit: int):
        super().__init__(message)
        self.product = product
        self.limit = limit
