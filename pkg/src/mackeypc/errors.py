"""Exception types shared across the package."""


class MackeyPCError(Exception):
    pass


class ResourceCapError(MackeyPCError):
    """A configured size cap was exceeded before a computation finished."""

    def __init__(self, cap: str, limit: int, message: str = ""):
        self.cap = cap
        self.limit = limit
        super().__init__(message or f"resource cap {cap!r} exceeded (limit {limit})")


class InvalidInputError(MackeyPCError, ValueError):
    pass


class AxiomError(InvalidInputError):
    """Raised when validation finds failed axioms; ``failures`` holds the witnesses."""

    def __init__(self, message: str, failures=()):
        self.failures = list(failures)
        super().__init__(message)
