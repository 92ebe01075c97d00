"""Error types shared across the package.

Every error carries a stable ``code`` string; the checker, the CLI, and the
HTTP service all report these codes, so tests can assert on them without
matching human-readable messages.
"""

from __future__ import annotations


class VeracityError(Exception):
    """Base class for all domain errors."""

    code = "VERACITY_ERROR"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)
        self.message = message or self.code


class ParseError(VeracityError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class WeightOutOfRangeError(VeracityError):
    code = "WEIGHT_OUT_OF_RANGE"


class CaptureError(VeracityError):
    code = "CAPTURE_ERROR"


class NotAnAssumptionError(VeracityError):
    code = "NOT_AN_ASSUMPTION"


class ArityMismatchError(VeracityError):
    code = "ARITY_MISMATCH"


class ActorMismatchError(VeracityError):
    code = "ACTOR_MISMATCH"


class EvidenceShapeError(VeracityError):
    code = "EVIDENCE_SHAPE_MISMATCH"


class ClaimMismatchError(VeracityError):
    code = "CLAIM_MISMATCH"


class ContextError(VeracityError):
    code = "CONTEXT_ERROR"


class FreshnessError(VeracityError):
    code = "FRESHNESS_VIOLATION"


class UnknownTrustEdgeError(VeracityError):
    code = "UNKNOWN_TRUST_EDGE"


class BrokenPathError(VeracityError):
    code = "BROKEN_PATH"


class FuelExhaustedError(VeracityError):
    """Raised when normalization runs out of fuel; carries the last term."""

    code = "FUEL_EXHAUSTED"

    def __init__(self, message: str, term=None):
        super().__init__(message)
        self.term = term


class InvalidTreeError(VeracityError):
    code = "INVALID_TREE"
