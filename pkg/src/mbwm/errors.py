"""Structured errors shared by every layer of the package.

Each error carries a stable machine-readable ``code`` so that CLI and HTTP
consumers can branch on the failure kind without parsing prose.
"""

from __future__ import annotations


class MbwmError(Exception):
    """Base class; ``code`` is a stable SCREAMING_SNAKE identifier."""

    code = "ERROR"

    def __init__(self, detail: str, code: str | None = None):
        super().__init__(detail)
        if code is not None:
            self.code = code
        self.detail = detail

    def __str__(self) -> str:
        return f"{self.code}: {self.detail}"


class ValidationError(MbwmError):
    """Bad input data (malformed PCS, inconsistent precondition, ...)."""

    code = "VALIDATION_ERROR"


class ComputationError(MbwmError):
    """Numeric failure that indicates a bug, not a modelling state."""

    code = "COMPUTATION_ERROR"


# Validation error codes
NONPOSITIVE_ENTRY = "NONPOSITIVE_ENTRY"
BEST_EQUALS_WORST = "BEST_EQUALS_WORST"
DIAGONAL_NOT_ONE = "DIAGONAL_NOT_ONE"
CROSS_MISMATCH = "CROSS_MISMATCH"
BAD_LENGTH = "BAD_LENGTH"
NOT_CONSISTENT = "NOT_CONSISTENT"
LENGTH_MISMATCH = "LENGTH_MISMATCH"
UNSUPPORTED_DEPTH = "UNSUPPORTED_DEPTH"
PARSE_ERROR = "PARSE_ERROR"
IO_ERROR = "IO_ERROR"
PORT_IN_USE = "PORT_IN_USE"

# Computation error codes
NO_CONVERGENCE = "NO_CONVERGENCE"
