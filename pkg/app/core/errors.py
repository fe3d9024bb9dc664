"""
Exception hierarchy shared by every service.

Each exception carries the process exit code the command line maps it to:
1 for unusable input, 2 for violated preconditions, 3 for failed claims.
"""
from typing import Any, Optional


class DegenerationError(Exception):
    """Base class for all engine errors."""

    exit_code: int = 1

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.message = message
        self.context = context

    def to_dict(self) -> dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": self.message,
            **{key: str(value) for key, value in self.context.items()},
        }


class InputError(DegenerationError):
    """Malformed JSON, unparsable scalar or unknown command argument."""

    exit_code = 1


class ArithmeticFailure(DegenerationError):
    """Division by the zero polynomial or a non-rational value where one is required."""

    exit_code = 2


class GenericityError(DegenerationError):
    """The quartic is degenerate along an edge of the central fiber."""

    exit_code = 2

    def __init__(self, message: str, edge: Optional[Any] = None, **context: Any):
        super().__init__(message, edge=edge, **context)
        self.edge = edge


class DegenerateConfiguration(DegenerationError):
    """Points or hyperplanes in special position."""

    exit_code = 2


class DisconnectedCurve(DegenerationError):
    exit_code = 2


class ValidationFailed(DegenerationError):
    """A curve does not reach the validity level an operation requires."""

    exit_code = 2

    def __init__(self, message: str, report: Any = None, **context: Any):
        super().__init__(message, **context)
        self.report = report


class LiftError(DegenerationError):
    """The triangular lift system has a vanishing leading coefficient."""

    exit_code = 2


class RecipeError(DegenerationError):
    """Inconsistent component pairing or graft recipe."""

    exit_code = 2


class GraftError(DegenerationError):
    """A graft postcondition does not hold."""

    exit_code = 3


class ClaimFailure(DegenerationError):
    exit_code = 3
