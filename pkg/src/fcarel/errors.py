"""Exception types shared across the package."""

from __future__ import annotations


class FcaError(Exception):
    """Base class for all package-specific errors."""


class FormatError(FcaError, ValueError):
    """Malformed context data: bad header, dimension mismatch, duplicate
    or illegal names, illegal incidence cell."""


class UnclarifiedContextError(FcaError, ValueError):
    """Strict-mode relevance was asked to work on an unclarified context."""


class DegenerateContextError(FcaError, ValueError):
    """The quantity is undefined on this context (e.g. no objects, so the
    total extent mass is zero)."""


class DegenerateEntropyError(DegenerateContextError):
    """Entropy-quotient scores are undefined because the base context has
    entropy zero (every object closure is the full object set)."""


class ConceptCapacityError(FcaError, RuntimeError):
    """Concept enumeration exceeded the configured capacity cap.

    ``count`` holds the number of concepts found before giving up.
    """

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count


class SelectionSizeError(FcaError, ValueError):
    """Requested selection size is out of range, or a combinatorial guard
    would be exceeded."""
