"""Exceptions used by the PyHasse module."""

INTEGRALITY_ERROR = "Genus formula produced a non-integral or negative value."


class PyHasseError(Exception):
    """Base class for every PyHasse error."""


class PyHasseInputError(PyHasseError, ValueError):
    """Invalid input provided."""


class NotSquarefreeError(PyHasseInputError):
    """The integer is divisible by the square of a prime."""


class InvalidModulusError(PyHasseInputError):
    """The modulus is not an odd prime."""


class NonFundamentalDiscriminantError(PyHasseInputError):
    """The discriminant is not fundamental."""


class RamifiedPrimeError(PyHasseInputError):
    """The prime divides 2D."""


class InvalidDiscriminantError(PyHasseInputError):
    """The discriminant is malformed."""


class NotExactDivisorError(PyHasseInputError):
    """The integer is not an exact divisor greater than one."""


class InvalidProbabilityError(PyHasseInputError):
    """The probability is outside [0, 1]."""


class NotOddPrimeError(PyHasseInputError):
    """The integer is not an odd prime."""


class InvalidParameterError(PyHasseInputError):
    """A numeric or configuration parameter is out of range."""


class VariantUnsupportedError(PyHasseInputError):
    """The condition-set variant does not apply to this curve."""


class BudgetExceededError(PyHasseInputError):
    """The class number scan would exceed the configured budget."""


class HypothesisFailure(PyHasseError):
    """One or more twist hypotheses fail for the curve."""

    def __init__(self, items, report=None):
        """Initialize with the failing hypothesis names."""
        self.items = tuple(items)
        self.report = report
        super().__init__(f"Hypothesis failure: {', '.join(self.items)}")


class InternalConsistencyError(PyHasseError):
    """An internal cross-check failed."""


class IntegralityViolation(InternalConsistencyError):
    """A genus or fixed-point identity is not integral."""
