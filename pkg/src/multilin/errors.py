class SchemaError(ValueError):
    """Malformed or invariant-violating input payload."""


class DimensionError(ValueError):
    """Incompatible dimensions or weights between operands."""


class SingularMatrixError(ArithmeticError):
    """An operation needed an invertible matrix."""


class WeightLimitError(ValueError):
    """A computation would exceed the configured stratum-weight cap."""
