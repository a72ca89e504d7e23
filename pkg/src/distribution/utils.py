# src/distribution/utils.py
"""Numerically stable kernels shared by the distribution functions"""
import numpy as np

from src.exceptions import ParameterError

_TINY = np.finfo(float).tiny


def as_integer_array(y: object, name: str = "y") -> np.ndarray:
    """Coerce y to an int64 array, rejecting non-integral values"""
    arr = np.asarray(y)
    if arr.dtype.kind in "iu":
        return arr.astype(np.int64, copy=False)
    if arr.dtype.kind == "b" or arr.dtype.kind not in "f":
        raise ParameterError(f"{name} must be integer-valued")
    if not np.all(np.isfinite(arr)) or np.any(arr != np.floor(arr)):
        raise ParameterError(f"{name} must be integer-valued")
    return arr.astype(np.int64)


def unwrap(values: np.ndarray) -> float | np.ndarray:
    """Return a Python scalar for 0-d results, the array otherwise"""
    if np.ndim(values) == 0:
        return values.item()
    return values


def log_scaled_power(log_alpha: float, log_p: float, y: np.ndarray) -> np.ndarray:
    """log(alpha * p**y), exact in log space for any integer y"""
    return log_alpha + y * log_p


def exp_neg_exp(s: np.ndarray) -> np.ndarray:
    """exp(-exp(s)); saturates to 0 below the smallest normal number"""
    with np.errstate(over="ignore"):
        out = np.exp(-np.exp(s))
    return np.where(out < _TINY, 0.0, out)


def one_minus_exp_neg_exp(s: np.ndarray) -> np.ndarray:
    """1 - exp(-exp(s)) without cancellation when exp(s) is small"""
    with np.errstate(over="ignore"):
        out = -np.expm1(-np.exp(s))
    return np.where(out < _TINY, 0.0, out)


def log_one_minus_exp_neg_exp(s: np.ndarray) -> np.ndarray:
    """log(1 - exp(-exp(s))), finite for every finite s"""
    s = np.asarray(s, dtype=float)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        x = np.exp(s)
        large = np.log1p(-np.exp(-x))
        moderate = np.log(-np.expm1(-x))
        # log(x - x**2/2 + ...) = s - x/2 + O(x**2)
        small = s - x / 2
    return np.where(s < -30, small, np.where(x > np.log(2), large, moderate))
