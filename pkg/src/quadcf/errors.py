class InvalidSurdError(ValueError):
    """Surd with zero denominator or negative radicand."""


class RationalRootError(ValueError):
    """A quadratic whose discriminant is a perfect square has rational roots."""


class ComplexRootError(ValueError):
    """A quadratic with non-positive discriminant has no real irrational root."""


class SquareInputError(ValueError):
    """Perfect-square input where an irrational square root is required."""


class NotPurelyPeriodicError(ValueError):
    pass


class IterationLimitError(RuntimeError):
    """Raised when an expansion exceeds its safety cap. Should be unreachable."""


class InvariantViolation(AssertionError):
    """A structural property guaranteed by theory did not hold."""
