from __future__ import annotations
"""Exceptions raised across the package. Every error carries a message naming
the offending value so that the CLI can print it as is"""


class ArrangementError(Exception):
    """Base class of every error raised by this package"""


class ParseError(ArrangementError):
    """Raised when a text description cannot be parsed"""

    def __init__(self, message: str, text: str = '', position: int = 0) -> None:
        super().__init__(message)
        self.text = text
        self.position = position

    def __str__(self) -> str:
        if not self.text:
            return super().__str__()
        return f'{super().__str__()} at position {self.position}: {self.text!r}'


class DomainError(ArrangementError):
    """Raised when an operation is called outside of its domain"""


class ComputationError(ArrangementError):
    """Raised when an exact computation reaches an inconsistent state"""
