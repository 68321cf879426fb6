"""Exception hierarchy for the package."""


class NewtonsingError(Exception):
    """Base class for all package errors."""


class ParseError(NewtonsingError):
    """Syntax or semantic error in polynomial input.

    Carries the 0-based ``position`` of the offending character in the
    input string.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(NewtonsingError, ValueError):
    """A precondition of an operation is violated (bad input)."""


class DegenerateInputError(DomainError):
    """A formula requiring non-degeneracy was called on degenerate input.

    ``verdict`` holds the NondegeneracyVerdict with the witness face.
    """

    def __init__(self, message: str, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class StabilizationError(DomainError):
    """The stabilized Newton number did not converge (non-isolated input)."""


class InternalError(NewtonsingError):
    """An internal consistency check failed; indicates a bug."""
