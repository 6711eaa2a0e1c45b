"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Malformed or non-finite input data."""


class ResolutionError(ValueError):
    """A sampling grid is too coarse or two grids are incompatible."""


class EmptyResultError(ValueError):
    """An operation has an empty result (e.g. disjoint polygons)."""


class NotAMeasureError(ValueError):
    """Atoms that do not close up cannot be a surface area measure."""


class UnsupportedError(ValueError):
    """Parameters outside the supported (well-conditioned) range."""


class SchemaError(InvalidInputError):
    """A JSON document does not match any body schema."""
