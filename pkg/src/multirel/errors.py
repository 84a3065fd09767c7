"""Exception types shared across the package."""

from __future__ import annotations


class NetworkFormatError(ValueError):
    """Base class for rejected network documents."""


class ParseError(NetworkFormatError):
    """A line of a network document does not match the grammar."""


class ValidationError(NetworkFormatError):
    """A structurally well-formed input violates a model rule."""


class GuardError(RuntimeError):
    """A requested computation exceeds the configured size guard."""
