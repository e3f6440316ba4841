"""Exception types shared across the package."""

__all__ = ["CatSeriesError", "DomainError", "NotConvergedError"]


class CatSeriesError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CatSeriesError, ValueError):
    """Argument outside the mathematical domain of an evaluator."""


class NotConvergedError(CatSeriesError, ArithmeticError):
    """A truncated computation could not meet its error budget."""
