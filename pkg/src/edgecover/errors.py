class EdgeCoverError(Exception):
    """Base class for every error raised by this package."""


class InputError(EdgeCoverError, ValueError):
    """Arguments violate an operation's preconditions."""


class ParseError(InputError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InfeasibleError(EdgeCoverError):
    """No solution satisfies the instance's constraints."""


class NoCandidateError(InputError):
    """Density augmentation has no vertex outside U with positive degree."""


class CapExceededError(EdgeCoverError):
    """Exhaustive oracle refused an instance above its size cap."""
