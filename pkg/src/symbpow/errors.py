"""Exception types shared across the package."""


class SymbpowError(Exception):
    """Base class for all errors raised by this package."""


class MalformedInputError(SymbpowError, ValueError):
    """Input data violates a structural precondition (lengths, signs, bounds)."""


class DimensionMismatchError(SymbpowError, ValueError):
    """Two objects live over different variable counts."""


class DomainError(SymbpowError, ValueError):
    """Input is outside the mathematical domain of the operation."""


class BudgetExceededError(SymbpowError, RuntimeError):
    """An exhaustive sweep would exceed the configured resource budget."""
