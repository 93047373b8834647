"""Shared exception types."""


class PuzzleGymError(Exception):
    """Base class for library-specific failures."""


class GenerationExhausted(PuzzleGymError):
    """Raised when rejection sampling runs out of its resample budget."""


class InvalidAttribute(PuzzleGymError, ValueError):
    """Raised for attribute names a motif family does not declare."""


class InvalidSpec(PuzzleGymError, ValueError):
    """Raised when a generator spec falls outside its configured bounds."""
