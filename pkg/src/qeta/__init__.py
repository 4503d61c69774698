"""Exact arithmetic for the enriched q-monomial basis of QSym and its dual in NSym."""
from .errors import (
    DomainError,
    ParseError,
    PoleError,
    QetaError,
    TruncationError,
    UsageError,
    ValidationError,
)
from .linear import FreeWordElement, NSymElement, QSymElement, TensorElement
from .scalars import Scalar, q, r

__version__ = "0.1.0"

__all__ = [
    "DomainError", "FreeWordElement", "NSymElement", "ParseError", "PoleError", "QSymElement",
    "QetaError", "Scalar", "TensorElement", "TruncationError", "UsageError", "ValidationError",
    "q", "r",
]
