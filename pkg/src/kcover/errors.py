"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an argument or file does not satisfy a precondition."""
