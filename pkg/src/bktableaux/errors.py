"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands live in different numbers of variables."""


class NotDivisibleError(ArithmeticError):
    """Exact division of Laurent polynomials failed."""

    def __init__(self, message, remainder_term=None):
        super().__init__(message)
        self.remainder_term = remainder_term


class NotInSpanError(ValueError):
    """A polynomial is not an integral combination of the requested basis."""


class ValidityError(ValueError):
    """A tableau or pattern violates a structural condition."""
