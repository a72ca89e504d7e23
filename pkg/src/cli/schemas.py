# src/cli/schemas.py
import argparse
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from src.exceptions import ParameterError
from src.distribution.schemas import Params
from src.estimation.models import FitMethod
from src.estimation.optimizer import OptimizerConfig
from src.cli.validators import (
    validate_alpha,
    validate_count,
    validate_eps_tail,
    validate_p,
    validate_seed,
    validate_workers,
)


@dataclass
class RunConfig:
    """Validated arguments of one CLI invocation"""
    command: str
    alpha: Optional[float] = None
    p: Optional[float] = None
    seed: int = 0
    n: Optional[int] = None
    method: Optional[FitMethod] = None
    eps_tail: float = 1e-12
    output: Optional[Path] = None
    y: list[int] = field(default_factory=list)
    y_from: Optional[int] = None
    y_to: Optional[int] = None
    data: Optional[Path] = None
    diagnostic: Optional[Path] = None
    curve: Optional[Path] = None
    k: Optional[int] = None
    reps: Optional[int] = None
    full_grid: bool = False
    workers: int = 1
    log: Optional[Path] = None
    alphas: Optional[list[float]] = None
    ps: Optional[list[float]] = None
    max_iter: Optional[int] = None
    xatol: Optional[float] = None

    def __post_init__(self) -> None:
        if self.alpha is not None and not validate_alpha(self.alpha):
            raise ParameterError(f"alpha must be > 0 (got {self.alpha})")
        if self.p is not None and not validate_p(self.p):
            raise ParameterError(f"p must be in (0, 1) (got {self.p})")
        if self.n is not None and not validate_count(self.n):
            raise ParameterError(f"n must be >= 1 (got {self.n})")
        if self.k is not None and not validate_count(self.k, 2):
            raise ParameterError(f"k must be >= 2 (got {self.k})")
        if self.reps is not None and not validate_count(self.reps):
            raise ParameterError(f"reps must be >= 1 (got {self.reps})")
        if not validate_eps_tail(self.eps_tail):
            raise ParameterError(f"eps_tail must be in (0, 1e-3) (got {self.eps_tail})")
        if not validate_workers(self.workers):
            raise ParameterError(f"workers must be in [1, 256] (got {self.workers})")
        if not validate_seed(self.seed):
            raise ParameterError(f"seed must be in [0, 2**64) (got {self.seed})")
        if self.y_from is not None and self.y_to is not None and self.y_from > self.y_to:
            raise ParameterError(f"--from must not exceed --to (got {self.y_from} > {self.y_to})")

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "RunConfig":
        values = {name: getattr(args, name) for name in cls.__dataclass_fields__ if hasattr(args, name)}
        if values.get("method") is not None:
            values["method"] = FitMethod(values["method"])
        values.setdefault("y", [])
        if values["y"] is None:
            values["y"] = []
        return cls(**values)

    def params(self) -> Params:
        """The (alpha, p) pair; both flags are required"""
        if self.alpha is None or self.p is None:
            raise ParameterError(f"{self.command} requires --alpha and --p")
        return Params(alpha=self.alpha, p=self.p)

    def optimizer_config(self) -> OptimizerConfig:
        base = OptimizerConfig.from_config()
        return OptimizerConfig(
            max_iter=self.max_iter or base.max_iter,
            xatol=self.xatol or base.xatol,
            fatol=base.fatol,
            n_starts=base.n_starts
        )
