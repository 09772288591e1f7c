"""Exception types shared by the whole package."""


class LeavittError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidDigraphError(LeavittError):
    """A digraph description is malformed (bad ids, bad separation, bad JSON)."""


class UnknownIdError(LeavittError):
    """A vertex or arrow id does not exist in the digraph at hand."""


class DomainError(LeavittError):
    """An operation was called with arguments outside its contract."""


class SeparationError(LeavittError):
    """The operation is only defined for the default (non-separated) partition."""


class PathSpaceError(LeavittError):
    """A path space that must be finite is not (or a path count hits a cycle)."""


class ExprSyntaxError(LeavittError):
    """Syntax error in an algebra expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
