"""Exception hierarchy.

Every error raised by the library derives from :class:`PRSpaceError`, which is
itself a :class:`ValueError`. ``category`` is the stable, machine-readable name
reported by the command-line interface.
"""

from __future__ import annotations


class PRSpaceError(ValueError):
    """Base class for all library errors."""

    @property
    def category(self) -> str:
        return type(self).__name__


class NegativeCell(PRSpaceError):
    pass


class EmptyDataset(PRSpaceError):
    pass


class UndefinedPrecision(PRSpaceError):
    pass


class NoPositives(PRSpaceError):
    pass


class DegenerateDataset(PRSpaceError):
    """A dataset lacks one of the two classes."""


class DegenerateGroup(DegenerateDataset):
    """A fold or task lacks one of the two classes."""

    def __init__(self, group, message: str | None = None):
        self.group = group
        super().__init__(message or f"group {group!r} must contain both classes")


class DegenerateSkew(PRSpaceError):
    """Skew outside the open interval (0, 1)."""


class DomainError(PRSpaceError):
    pass


class InvalidRange(PRSpaceError):
    pass


class OutOfBounds(PRSpaceError):
    """A score lies outside its analytic range for the given skew."""


class UndefinedScore(PRSpaceError):
    pass


class EmptyInput(PRSpaceError):
    pass


class InsufficientNegatives(PRSpaceError):
    pass


class ParseError(PRSpaceError):
    """Malformed prediction file. ``line`` is the 1-based physical line."""

    def __init__(self, message: str, line: int | None = None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"line {line}: "
        elif where:
            where += " "
        super().__init__(where + message)


class WriteError(PRSpaceError):
    pass
