class PreconditionError(ValueError):
    """An input violates a documented precondition of the requested computation."""


class DataError(PreconditionError):
    """A data file is missing, malformed, or fails validation."""
