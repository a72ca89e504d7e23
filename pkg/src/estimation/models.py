# src/estimation/models.py
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Iterable, Optional

import numpy as np
import pandas as pd

from src.exceptions import DataError
from src.distribution.schemas import Params


class FitMethod(Enum):
    MLE = "mle"
    MOMENTS = "moments"
    PROPORTIONS = "proportions"
    SURVREG = "survreg"


@dataclass(frozen=True, eq=False)
class Sample:
    """Integer observations in their original order"""
    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.values)
        if arr.ndim != 1 or arr.size == 0:
            raise DataError("sample must contain at least one observation")
        if arr.dtype.kind == "f":
            if not np.all(np.isfinite(arr)) or np.any(arr != np.floor(arr)):
                raise DataError("sample values must be integers")
        elif arr.dtype.kind not in "iu":
            raise DataError(f"sample values must be integers (got dtype {arr.dtype})")
        arr = arr.astype(np.int64)
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Sample":
        return cls(np.asarray(list(values)))

    @property
    def n(self) -> int:
        return int(self.values.size)

    @cached_property
    def counts(self) -> tuple[int, int, int]:
        """(n_neg, n_zero, n_pos)"""
        v = self.values
        return int(np.count_nonzero(v < 0)), int(np.count_nonzero(v == 0)), int(np.count_nonzero(v > 0))

    @cached_property
    def sorted_unique(self) -> tuple[np.ndarray, np.ndarray]:
        """Distinct values in ascending order and their multiplicities"""
        return np.unique(self.values, return_counts=True)

    def raw_moment(self, r: int) -> float:
        return math.fsum(self.values.astype(float) ** r) / self.n

    @property
    def variance(self) -> float:
        """Divisor-n variance, accumulated about the mean"""
        return float(np.var(self.values.astype(float)))

    @property
    def median(self) -> float:
        return float(np.median(self.values))

    def shifted(self, c: int) -> "Sample":
        return Sample(self.values + int(c))


@dataclass
class DiagnosticLine:
    """Least-squares line z = a + b y through the transformed empirical survival"""
    y: np.ndarray
    z: np.ndarray
    intercept_a: float
    slope_b: float
    r_squared: float

    @property
    def points(self) -> list[tuple[int, float]]:
        return [(int(yi), float(zi)) for yi, zi in zip(self.y, self.z)]

    @property
    def z_fit(self) -> np.ndarray:
        return self.intercept_a + self.slope_b * self.y

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"y": self.y, "z": self.z, "z_fit": self.z_fit})


@dataclass
class FitResult:
    params: Params
    method: FitMethod
    loglik: float
    se_alpha: Optional[float] = None
    se_p: Optional[float] = None
    cov_alpha_p: Optional[float] = None
    converged: bool = True
    iterations: int = 0
    notes: list[str] = field(default_factory=list)
    objective: Optional[float] = None
    diagnostic: Optional[DiagnosticLine] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "method": self.method.value,
            "alpha": self.params.alpha,
            "p": self.params.p,
            "loglik": self.loglik,
            "se_alpha": self.se_alpha,
            "se_p": self.se_p,
            "cov": self.cov_alpha_p,
            "converged": self.converged,
            "iterations": self.iterations,
            "notes": "; ".join(self.notes)
        }
