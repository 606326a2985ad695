"""Shared exception types.

DomainError signals a violated precondition (bad input, not a failed
theorem check); ResourceLimitError a configurable work cap being hit;
InvariantViolation an internal cross-check disagreeing, which is always
reported rather than silently resolved.
"""


class DigitclassError(Exception):
    """Base class so callers can catch everything the package raises."""


class DomainError(DigitclassError, ValueError):
    pass


class ResourceLimitError(DigitclassError, RuntimeError):
    pass


class InvariantViolation(DigitclassError, RuntimeError):
    pass
