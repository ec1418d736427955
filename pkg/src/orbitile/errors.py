"""Error hierarchy shared across the package.

Every failure mode the kernel can report is a subclass of OrbitileError so
callers (CLI, HTTP service) can map them to exit codes / status codes
without string matching.
"""


class OrbitileError(Exception):
    """Base class for all package errors."""


class ParseError(OrbitileError):
    """Malformed notation text.  Carries the character position."""

    def __init__(self, message, position):
        super().__init__(message)
        self.position = position


class NotRealizableError(OrbitileError):
    """Bad orbifold: no geometric realization exists.  May carry a hint
    telling the caller how to repair the notation."""

    def __init__(self, message, hint=None):
        super().__init__(message)
        self.hint = hint


class KindMismatchError(OrbitileError):
    """Operation mixed points or geodesics from different geometries."""


class DegenerateInputError(OrbitileError):
    """Coincident points or otherwise degenerate geometric input."""


class IncidenceError(OrbitileError):
    """A point required to lie on a geodesic does not."""


class WrongGeometryError(OrbitileError):
    """Formula applied to orders whose geometry does not match."""


class NumericDomainError(OrbitileError):
    """A numeric argument left its valid domain (acos/acosh input,
    attenuation weight, option range)."""


class InfeasibleFreeVariableError(OrbitileError):
    """A decomposition cut length makes some piece unconstructible."""

    def __init__(self, message, cut_index=None):
        super().__init__(message)
        self.cut_index = cut_index


class ConstructionError(OrbitileError):
    """Polygon construction failed; carries residual diagnostics."""

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals or {}


class ObjectTooLargeError(OrbitileError):
    """Embedded object does not fit inside the unit disk."""


class RequestValidationError(OrbitileError):
    """A request envelope failed validation before any geometry ran.
    May carry a hint telling the caller how to repair the request."""

    def __init__(self, message, hint=None):
        super().__init__(message)
        self.hint = hint


class CoverTooLargeError(OrbitileError):
    """The request asks for more copies than the service will produce."""
