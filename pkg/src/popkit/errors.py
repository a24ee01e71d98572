"""Exception hierarchy shared by every popkit module."""

from __future__ import annotations


class PopkitError(Exception):
    """Base class for all errors raised by popkit."""


class InvalidInputError(PopkitError):
    """An argument violates an operation's precondition."""


class InvalidPosetError(PopkitError):
    """A relation set is not a strict partial order (it contains a cycle)."""


class ResourceLimitError(PopkitError):
    """An enumeration request exceeds the configured cap."""


class InvalidGfError(PopkitError):
    """A rational generating function cannot be expanded as a power series."""


class ParseError(InvalidInputError):
    """A pattern string does not match the notation grammar.

    Carries the byte offset of the failure and the set of tokens that
    would have been accepted there.
    """

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        self.offset = offset
        self.expected = expected
        detail = f"{message} at offset {offset}"
        if expected:
            detail += " (expected: " + ", ".join(expected) + ")"
        super().__init__(detail)
