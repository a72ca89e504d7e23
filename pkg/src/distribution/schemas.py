# src/distribution/schemas.py
import math
from dataclasses import dataclass

import numpy as np

from src.exceptions import ParameterError


@dataclass(frozen=True)
class Params:
    """Parameter pair (alpha, p) of DGUD(alpha, p).

    alpha is location-like (alpha = p**-mu), p is scale-like (p = exp(-1/sigma)),
    where (mu, sigma) are the location and scale of the continuous Gumbel
    variable whose floor follows DGUD(alpha, p).
    """
    alpha: float
    p: float

    def __post_init__(self) -> None:
        alpha = float(self.alpha)
        p = float(self.p)
        if not math.isfinite(alpha) or alpha <= 0:
            raise ParameterError(f"alpha must be > 0 (got {self.alpha})")
        if not math.isfinite(p) or not 0 < p < 1:
            raise ParameterError(f"p must be in (0, 1) (got {self.p})")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "p", p)

    @classmethod
    def from_location_scale(cls, mu: float, sigma: float) -> "Params":
        """Build from the continuous Gumbel location mu and scale sigma"""
        if not math.isfinite(sigma) or sigma <= 0:
            raise ParameterError(f"sigma must be > 0 (got {sigma})")
        if not math.isfinite(mu):
            raise ParameterError(f"mu must be finite (got {mu})")
        return cls(alpha=math.exp(mu / sigma), p=math.exp(-1.0 / sigma))

    @classmethod
    def one_parameter(cls, p: float) -> "Params":
        """One-parameter member DGUD(p), i.e. alpha = 1"""
        return cls(alpha=1.0, p=p)

    @classmethod
    def standard(cls) -> "Params":
        """Standard member: alpha = 1, p = exp(-1)"""
        return cls(alpha=1.0, p=math.exp(-1.0))

    @property
    def log_alpha(self) -> float:
        return math.log(self.alpha)

    @property
    def log_p(self) -> float:
        return math.log(self.p)

    @property
    def sigma(self) -> float:
        return 1.0 / -math.log(self.p)

    @property
    def mu(self) -> float:
        return math.log(self.alpha) / -math.log(self.p)

    def shifted(self, c: int) -> "Params":
        """Law of Y + c when Y ~ DGUD(alpha, p): alpha -> alpha * p**-c"""
        return Params(alpha=math.exp(self.log_alpha - c * self.log_p), p=self.p)

    def to_dict(self) -> dict[str, float]:
        return {"alpha": self.alpha, "p": self.p}


@dataclass(frozen=True)
class IntSupport:
    """Inclusive integer window [lo, hi] used to truncate sums over Z"""
    lo: int
    hi: int
    eps_tail: float = 0.0

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ParameterError(f"support requires lo <= hi (got [{self.lo}, {self.hi}])")

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def values(self) -> np.ndarray:
        return np.arange(self.lo, self.hi + 1, dtype=np.int64)
