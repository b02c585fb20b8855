"""
Exception hierarchy for signedtools.

Library code raises these; the command-line layer maps them to exit codes.
"""

from typing import Optional


class SignedToolsError(Exception):
    """Base class for all signedtools errors."""


class GraphInputError(SignedToolsError, ValueError):
    """Invalid input: vertex out of range, bad size, bad modulus, bad recipe."""


class PreconditionError(SignedToolsError):
    """An operation was called outside the class of graphs it is defined on."""


class GraphParseError(GraphInputError):
    """A signed edge-list file could not be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
