"""Custom exceptions for the engine.

Every exception carries the command-line exit code it maps to: 1 when a
checked mathematical property fails, 2 when the input itself is broken.
"""

from typing import Optional

EXIT_PROPERTY_FAILED = 1
EXIT_MALFORMED_INPUT = 2


class HopfGaloisError(Exception):
    """Base exception for all engine errors."""

    exit_code: int = EXIT_PROPERTY_FAILED
    default_detail: str = "Engine error"

    def __init__(self, detail: Optional[str] = None):
        self.detail = detail or self.default_detail
        super().__init__(self.detail)


class MalformedInputError(HopfGaloisError):
    """Exception raised when input tensors or files are structurally invalid."""

    exit_code = EXIT_MALFORMED_INPUT
    default_detail = "Malformed input"


class ParseError(MalformedInputError):
    """Exception raised when an input file cannot be parsed.

    ``location`` is ``line:col`` for syntax errors and a dotted JSON path
    (``objects.1.mult.5``) for structural ones.
    """

    default_detail = "Parse error"

    def __init__(self, detail: Optional[str] = None, location: Optional[str] = None):
        self.location = location
        message = detail or self.default_detail
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class ScalarParseError(ParseError):
    """Exception raised when a scalar string is not an exact number."""

    default_detail = "Scalar does not parse"


class UnsupportedGroupError(HopfGaloisError):
    """Exception raised when a builtin group or irrep list is not available."""

    exit_code = EXIT_MALFORMED_INPUT
    default_detail = "Unsupported group"


class PreconditionError(HopfGaloisError):
    """Exception raised when an operation's precondition does not hold."""

    default_detail = "Precondition violated"


class NotPrincipalError(HopfGaloisError):
    """Exception raised when the dual-bases system has no solution."""

    default_detail = "Isotypic block is not principal"


class NotGaloisError(HopfGaloisError):
    """Exception raised when the canonical map is not bijective."""

    default_detail = "Canonical map is not bijective"


class IncompleteIrrepsError(HopfGaloisError):
    """Exception raised when irreducible coefficients do not span the Hopf algebra."""

    default_detail = "Irreducible list is incomplete"


class EngineDefectError(HopfGaloisError):
    """Exception raised when an identity the engine guarantees fails."""

    default_detail = "Engine defect"


class BundleConstructionError(EngineDefectError):
    """Exception raised when a corpus builder produces an invalid object."""

    default_detail = "Builder output failed its axiom suite"
