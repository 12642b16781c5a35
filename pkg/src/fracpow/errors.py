"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation supports."""


class ConvergenceError(ArithmeticError):
    """An iterative procedure hit its iteration cap."""


class NotPositiveDefiniteError(ArithmeticError):
    """A factorization met a non-positive pivot."""
