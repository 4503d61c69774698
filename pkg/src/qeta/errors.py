"""Exception types shared across the package."""


class QetaError(Exception):
    """Base class for all errors raised by qeta."""


class DomainError(QetaError, ValueError):
    """An argument lies outside the domain of an operation."""


class UsageError(QetaError, TypeError):
    """Operands are incompatible (wrong basis, mismatched parameters, ...)."""


class PoleError(QetaError, ZeroDivisionError):
    """A rational function was evaluated at one of its poles, or divided by zero."""


class TruncationError(QetaError, ValueError):
    """A truncated polynomial cannot hold the requested degree."""


class ValidationError(QetaError, ValueError):
    """Input failed a structural check (e.g. it is not quasisymmetric)."""


class ParseError(QetaError, ValueError):
    """Malformed textual or JSON input."""
