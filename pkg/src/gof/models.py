# src/gof/models.py
from dataclasses import dataclass, field
from typing import Any

import pandas as pd

from src.distribution.schemas import Params


@dataclass
class GofReport:
    """Discrete KS statistic, its p-value lower bound and the |ecdf - cdf| curve"""
    ks_stat: float
    pvalue_lower_bound: float
    n: int
    fitted: Params
    abs_diff_points: list[tuple[int, float]] = field(default_factory=list)
    tail_mass: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "ks_stat": self.ks_stat,
            "pvalue_lower_bound": self.pvalue_lower_bound,
            "n": self.n,
            "alpha": self.fitted.alpha,
            "p": self.fitted.p,
            "tail_mass": self.tail_mass
        }

    def abs_diff_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.abs_diff_points, columns=["y", "abs_diff"])
