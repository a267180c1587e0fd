"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ResourceError(RuntimeError):
    """A configured resource budget (memory, support size) would be exceeded."""
