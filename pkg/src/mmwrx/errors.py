"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised when a parameter or configuration value is invalid.

    ``field`` carries the offending key so interfaces (CLI, HTTP) can point
    the user at it.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class NumericError(RuntimeError):
    """Raised when a numerical routine fails (SVD breakdown, degenerate input).

    ``context`` identifies where the failure happened, e.g. a trial index.
    """

    def __init__(self, message: str, context: str | None = None):
        super().__init__(message if context is None else f"{message} ({context})")
        self.context = context


class LimitError(RuntimeError):
    """Raised when a request exceeds a documented service limit."""

    def __init__(self, message: str, limit: int | None = None):
        super().__init__(message)
        self.limit = limit
