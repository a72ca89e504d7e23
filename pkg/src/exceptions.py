# src/exceptions.py
from typing import Any


class DGUDException(Exception):
    """Base exception for the discrete Gumbel toolkit"""
    pass

class ParameterError(DGUDException, ValueError):
    """Raised when a parameter or argument violates its constraint"""
    pass

class DataError(DGUDException, ValueError):
    """Raised when sample data cannot support the requested computation"""
    pass

class DegenerateSampleError(DataError):
    """Raised when a sample has (effectively) zero variance"""
    pass

class InsufficientDataError(DataError):
    """Raised when too few usable points remain after filtering"""
    pass

class MethodInapplicableError(DGUDException):
    """Raised when an estimation method's preconditions do not hold"""
    pass

class InconsistentEstimateError(DGUDException):
    """Raised when an estimate falls outside the parameter space"""

    def __init__(self, message: str, diagnostic: Any = None) -> None:
        super().__init__(message)
        self.diagnostic = diagnostic

class DataFileError(DGUDException, OSError):
    """Raised when a data or output file cannot be read or written"""
    pass
