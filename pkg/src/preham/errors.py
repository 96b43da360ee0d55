"""Shared exception types."""


class DivisionByZero(ZeroDivisionError):
    """Division by a zero field element or zero operator."""


class PreconditionFailed(ValueError):
    """An operation was called outside its contract."""


class ParseError(ValueError):
    """Syntax error with a 1-based source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class SortError(ValueError):
    """Expression parsed but does not live in the requested sort."""

    def __init__(self, expected: str, found: str):
        super().__init__(f"expected {expected}, found {found}")
        self.expected = expected
        self.found = found


class TimeLimitExceeded(Exception):
    """Raised at solver checkpoints once the configured deadline passes."""
