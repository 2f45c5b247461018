"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a documented precondition or type invariant."""


class NonEuclideanError(DomainError):
    """A squared-distance matrix failed the positive-semidefiniteness test.

    Carries the offending minimum eigenvalue of the doubly centered matrix.
    """

    def __init__(self, message: str, lambda_min: float):
        super().__init__(message)
        self.lambda_min = lambda_min


class ResourceLimitError(RuntimeError):
    """A dense allocation would exceed the configured size cap."""


class ParseError(ValueError):
    """A file could not be parsed into the expected matrix format."""
