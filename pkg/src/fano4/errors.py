"""Exception types shared across the package.

Everything in this library is exact integer/rational arithmetic, so any
failed integrality or cross-check is a hard bug, never a rounding artifact.
"""


class ConsistencyError(RuntimeError):
    """Two independent computation paths disagreed on a value."""


class IntegrityError(ArithmeticError):
    """A quantity that must be an integer (or stay positive) failed the check."""


class ContextMismatchError(ValueError):
    """Divisor/curve classes from different families were combined."""
