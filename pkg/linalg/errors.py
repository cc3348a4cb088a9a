"""
Exceptions raised by the linear algebra routines.
"""


class SingularMatrixError(ArithmeticError):
    """Raised when elimination meets a pivot below the singularity tolerance."""

    def __init__(self, message: str, pivot_index: int | None = None):
        self.pivot_index = pivot_index
        super().__init__(message)


class DimensionMismatchError(ValueError):
    """Raised when operand shapes are incompatible."""
