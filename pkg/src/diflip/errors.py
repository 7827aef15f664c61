"""Exception types shared across the package."""


class DiflipError(Exception):
    """Base class for all library errors."""


class StructuralError(DiflipError):
    """A value violates a structural invariant (bad arc endpoints, bad
    rotation coverage, malformed face multiset)."""


class FormatError(DiflipError):
    """Text input could not be parsed; the message carries a line number."""


class PreconditionError(DiflipError):
    """An operation was invoked outside its contract."""


class NotStronglyTwoEdgeConnectedError(PreconditionError):
    """The operation needs strong 2-edge-connectivity.

    ``cut`` holds a violating 2-edge-cut when one is available, as a
    machine-checkable certificate.
    """

    def __init__(self, message, cut=None):
        super().__init__(message)
        self.cut = cut


class InternalError(DiflipError):
    """A consistency check that mathematically cannot fail did; this
    indicates a bug, not bad input."""
