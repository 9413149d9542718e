"""
Error hierarchy shared by the library and the command line front end.

Every error knows the process exit code it maps to and can describe itself
as a flat dictionary for structured logging (see `src.log.log_exception`).
"""

from typing import Any, Dict, Optional


class WHFramesError(Exception):
    """Base class for all library errors."""

    exit_code: int = 3

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "exit_code": self.exit_code,
            **self.details,
        }


# --- Input errors (exit 3) ---
class InputError(WHFramesError):
    exit_code = 3


class SetLiteralError(InputError):
    pass


class PolynomialLiteralError(InputError):
    pass


class ExpressionSyntaxError(InputError):
    def __init__(self, message: str, offset: int, expected: Optional[str] = None):
        detail = f"{message} at offset {offset}"
        if expected:
            detail += f" (expected {expected})"
        super().__init__(detail, offset=offset, expected=expected)
        self.offset = offset
        self.expected = expected


class PiecewiseFileError(InputError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}", line=line)
        self.line = line


class InvalidPiecewiseError(InputError):
    pass


class EmptySetError(InputError):
    pass


class InvalidDecompositionError(InputError):
    pass


class PreconditionError(InputError):
    pass


class NoRootsError(InputError):
    pass


class EvaluationError(InputError):
    def __init__(self, message: str, t: float, piece_index: Optional[int] = None):
        super().__init__(
            f"{message} at t={t!r} (piece {piece_index})", t=t, piece_index=piece_index
        )
        self.t = t
        self.piece_index = piece_index


class UnsupportedFunctionError(InputError):
    pass


class OracleError(InputError):
    pass


class ConfigError(InputError):
    pass


class UsageError(InputError):
    """Unknown subcommand, flag or missing argument on the command line."""


# --- Internal errors (exit 4) ---
class InconsistencyError(WHFramesError):
    """Two independent computations of the same quantity disagree."""

    exit_code = 4


class CalibrationError(WHFramesError):
    exit_code = 4
