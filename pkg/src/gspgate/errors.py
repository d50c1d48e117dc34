"""Exception and warning types shared across the package."""

from __future__ import annotations


class GspGateError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GspGateError, ValueError):
    """An input value lies outside the quantity's valid domain."""


class UnitMismatchError(GspGateError, ValueError):
    """Two depth quantities with different unit tags were combined."""


class RegimeError(GspGateError):
    """The requested approximation is not valid for these inputs.

    Carries the measured depth ratio so callers can report how far the
    inputs are from the regime boundary.
    """

    def __init__(self, message: str, ratio: float):
        super().__init__(message)
        self.ratio = ratio


class ParseError(GspGateError, ValueError):
    """A text input (file format or table) failed to parse."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ResourceLimitError(GspGateError):
    """A problem size exceeds a configured or hard-coded cap."""


class ConvergenceError(GspGateError):
    """An iterative numerical routine failed to converge."""


class GspGateWarning(UserWarning):
    """Base class for warnings issued by this package."""


class AcceptabilityWarning(GspGateWarning):
    """A criterion evaluation succeeded but the result needs a caveat."""


class NormalizationWarning(GspGateWarning):
    """An input vector was renormalized by more than the quiet threshold."""
