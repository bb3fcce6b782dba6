"""
Exception and warning types shared by the algebra modules.

Every error carries the process exit code the command line reports for it.
"""

from config.settings import EXIT_PRECONDITION, EXIT_RETRY_EXHAUSTED, EXIT_VALIDATION


class SchemeError(Exception):
    """Base class of all errors raised by the library."""

    exit_code = EXIT_VALIDATION


# Validation errors: the input is malformed or violates a scheme invariant

class ParseError(SchemeError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{position}: {message}"
        super().__init__(message)
        self.position = position


class RingMismatchError(SchemeError, ValueError):
    pass


class NotHomogeneousError(SchemeError, ValueError):
    pass


class CapExceededError(SchemeError):
    pass


class NotZeroDimensionalError(SchemeError):
    pass


class NotSaturatedError(SchemeError):
    pass


class SupportAtInfinityError(SchemeError):
    """The support meets Z(X0), so X0 is a zerodivisor."""


class DuplicatePointError(SchemeError, ValueError):
    pass


class NonPrimaryComponentError(SchemeError):
    pass


class DegreeOutOfRangeError(SchemeError, ValueError):
    pass


class SocleDirectionError(SchemeError, ValueError):
    pass


# Precondition errors: valid input, but the requested analysis does not apply

class NotGorensteinError(SchemeError):
    exit_code = EXIT_PRECONDITION


class NotSubschemeError(SchemeError):
    exit_code = EXIT_PRECONDITION


class ComponentsRequiredError(SchemeError):
    exit_code = EXIT_PRECONDITION


class MissingContextError(SchemeError):
    exit_code = EXIT_PRECONDITION


class MethodDisagreementError(SchemeError):
    exit_code = EXIT_PRECONDITION


class RetryBudgetExhaustedError(SchemeError):
    exit_code = EXIT_RETRY_EXHAUSTED

    def __init__(self, message, seed=None, attempts=None):
        if seed is not None:
            message = f"{message} (seed={seed}, attempts={attempts})"
        super().__init__(message)
        self.seed = seed
        self.attempts = attempts


# Warnings

class VacuousPieceWarning(UserWarning):
    """A colon was taken by an empty graded piece; the ideal is returned unchanged."""


class FiniteFieldWarning(UserWarning):
    """A statement that needs an infinite base field is evaluated over F_p."""


class AutoSaturationWarning(UserWarning):
    """A raw ideal was not saturated and has been replaced by its saturation."""
