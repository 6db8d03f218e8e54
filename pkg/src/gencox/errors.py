"""Exception hierarchy shared by all modules."""


class GencoxError(Exception):
    """Base class for every error raised by this package."""


class MalformedInputError(GencoxError, ValueError):
    """Input tables, tokens or files do not have the expected shape."""


class DomainError(GencoxError, ValueError):
    """Input is well formed but outside the domain of the operation."""


class NoPathError(GencoxError):
    """Two vertices lie in different components."""


class IntegrityError(GencoxError, RuntimeError):
    """An internal consistency guarantee failed; indicates a bug or bad data."""


class RelabelRequiredError(GencoxError, ValueError):
    """Colour labels of two graphs collide."""


class NotRealisableError(GencoxError):
    """Frame transport does not close around some cycle."""

    def __init__(self, message, cycle=None):
        super().__init__(message)
        self.cycle = cycle


class InconclusiveError(GencoxError):
    """A search cap was reached before an answer was found."""


class ScanBoundError(GencoxError):
    """No generic point was found within the scan bound."""


class UnsupportedArrangementError(GencoxError):
    """Arrangement is not central, essential and simplicial."""


class ColouringConflictError(GencoxError):
    """Ray colour propagation produced two colours for one ray."""
