# src/simulation/models.py
import math
from dataclasses import dataclass
from typing import Any, Optional

from src.constants import Z_CRIT
from src.exceptions import ParameterError
from src.distribution.schemas import Params
from src.estimation.models import FitResult


@dataclass(frozen=True)
class SimCell:
    """One (alpha, p, k) cell of the Monte Carlo study"""
    true_params: Params
    sample_size: int
    replications: int
    seed: int

    def __post_init__(self) -> None:
        if self.sample_size < 2:
            raise ParameterError(f"sample_size must be >= 2 (got {self.sample_size})")
        if self.replications < 1:
            raise ParameterError(f"replications must be >= 1 (got {self.replications})")


@dataclass
class ReplicationRecord:
    index: int
    seed: int
    alpha_hat: Optional[float] = None
    p_hat: Optional[float] = None
    se_alpha: Optional[float] = None
    se_p: Optional[float] = None
    cov_alpha_p: Optional[float] = None
    converged: bool = False
    covers_alpha: Optional[bool] = None
    covers_p: Optional[bool] = None
    error: Optional[str] = None

    @property
    def has_se(self) -> bool:
        return self.converged and self.se_alpha is not None and self.se_p is not None

    @classmethod
    def from_fit(cls, index: int, seed: int, result: FitResult, true_params: Params) -> "ReplicationRecord":
        record = cls(
            index=index,
            seed=seed,
            alpha_hat=result.params.alpha,
            p_hat=result.params.p,
            se_alpha=result.se_alpha,
            se_p=result.se_p,
            cov_alpha_p=result.cov_alpha_p,
            converged=result.converged
        )
        if record.has_se:
            record.covers_alpha = abs(record.alpha_hat - true_params.alpha) <= Z_CRIT * record.se_alpha
            record.covers_p = abs(record.p_hat - true_params.p) <= Z_CRIT * record.se_p
        return record

    def to_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "seed": self.seed,
            "alpha_hat": self.alpha_hat,
            "p_hat": self.p_hat,
            "se_alpha": self.se_alpha,
            "se_p": self.se_p,
            "cov_alpha_p": self.cov_alpha_p,
            "converged": self.converged,
            "covers_alpha": self.covers_alpha,
            "covers_p": self.covers_p,
            "error": self.error
        }


@dataclass
class ParameterSummary:
    """Monte Carlo criteria for one parameter; nan when no replication qualifies"""
    mean_estimate: float = math.nan
    mean_bias: float = math.nan
    mean_se: float = math.nan
    avg_ci_width: float = math.nan
    coverage_rate: float = math.nan


@dataclass
class SimReport:
    cell: SimCell
    alpha: ParameterSummary
    p: ParameterSummary
    mean_cov_alpha_p: float
    n_failed: int
    n_converged: int

    def to_row(self) -> dict[str, Any]:
        """One row in the simulation table layout"""
        return {
            "alpha": self.cell.true_params.alpha,
            "p": self.cell.true_params.p,
            "n": self.cell.sample_size,
            "E(alpha_hat)": self.alpha.mean_estimate,
            "Bias(alpha_hat)": self.alpha.mean_bias,
            "E[SE(alpha_hat)]": self.alpha.mean_se,
            "AW(alpha)": self.alpha.avg_ci_width,
            "CR(alpha)": self.alpha.coverage_rate,
            "E(p_hat)": self.p.mean_estimate,
            "Bias(p_hat)": self.p.mean_bias,
            "E[SE(p_hat)]": self.p.mean_se,
            "AW(p)": self.p.avg_ci_width,
            "CR(p)": self.p.coverage_rate,
            "E[Cov(alpha_hat,p_hat)]": self.mean_cov_alpha_p
        }
