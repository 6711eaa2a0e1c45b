"""Complex difference bodies of convex bodies in C^m (m = 1, 2)."""
from .errors import (
    EmptyResultError,
    InvalidInputError,
    NotAMeasureError,
    ResolutionError,
    SchemaError,
    UnsupportedError,
)

__version__ = "0.1.0"

__all__ = [
    "EmptyResultError",
    "InvalidInputError",
    "NotAMeasureError",
    "ResolutionError",
    "SchemaError",
    "UnsupportedError",
]
