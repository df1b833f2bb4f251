"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class IntegrityError(RuntimeError):
    """An internal invariant was violated; indicates a bug, not bad input."""
