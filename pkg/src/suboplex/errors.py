"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a documented precondition."""


class CapExceededError(ValidationError):
    """An input exceeds a documented size cap for exact computation."""
