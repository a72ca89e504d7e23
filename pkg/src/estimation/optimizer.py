# src/estimation/optimizer.py
"""Multi-start Nelder-Mead search on the unconstrained scale (log alpha, logit p)."""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize
from scipy.special import expit, logit

from src.config import config
from src.constants import (
    DEFAULT_FATOL,
    DEFAULT_MAX_ITER,
    DEFAULT_N_STARTS,
    DEFAULT_XATOL,
    GRID_LOG_ALPHA_OFFSETS,
    GRID_P_VALUES,
)
from src.exceptions import ParameterError
from src.distribution.schemas import Params

logger = logging.getLogger(__name__)

Objective = Callable[[Params], float]


@dataclass(frozen=True)
class OptimizerConfig:
    max_iter: int = DEFAULT_MAX_ITER
    xatol: float = DEFAULT_XATOL
    fatol: float = DEFAULT_FATOL
    n_starts: int = DEFAULT_N_STARTS

    def __post_init__(self) -> None:
        if self.max_iter < 1:
            raise ParameterError(f"max_iter must be >= 1 (got {self.max_iter})")
        if self.xatol <= 0 or self.fatol <= 0:
            raise ParameterError("optimizer tolerances must be > 0")
        if self.n_starts < 1:
            raise ParameterError(f"n_starts must be >= 1 (got {self.n_starts})")

    @classmethod
    def from_config(cls) -> "OptimizerConfig":
        return cls(max_iter=config.MAX_ITER, xatol=config.XATOL)


@dataclass
class OptimizeOutcome:
    params: Params
    value: float
    converged: bool
    iterations: int
    starts_run: int


def to_unconstrained(params: Params) -> np.ndarray:
    return np.array([params.log_alpha, float(logit(params.p))])


def from_unconstrained(theta: np.ndarray) -> Params:
    return Params(alpha=math.exp(theta[0]), p=float(expit(theta[1])))


def _guarded(objective: Objective) -> Callable[[np.ndarray], float]:
    def wrapped(theta: np.ndarray) -> float:
        try:
            value = objective(from_unconstrained(theta))
        except (ParameterError, OverflowError):
            return math.inf
        return value if math.isfinite(value) else math.inf
    return wrapped


def grid_starts(objective: Objective, center: float, config: OptimizerConfig) -> list[Params]:
    """Best n_starts points of a coarse (p, log alpha) grid.

    For each p, log alpha is offset around the value placing the median of
    DGUD(alpha, p) at center.
    """
    scored: list[tuple[float, Params]] = []
    for p in GRID_P_VALUES:
        base = math.log(math.log(2)) - (center + 1) * math.log(p)
        for offset in GRID_LOG_ALPHA_OFFSETS:
            try:
                params = Params(alpha=math.exp(base + offset), p=p)
            except (ParameterError, OverflowError):
                continue
            value = _guarded(objective)(to_unconstrained(params))
            if math.isfinite(value):
                scored.append((value, params))
    scored.sort(key=lambda item: (item[0], item[1].alpha, item[1].p))
    return [params for _, params in scored[:config.n_starts]]


def multistart_minimize(objective: Objective, starts: Sequence[Params], config: OptimizerConfig) -> OptimizeOutcome:
    """Run Nelder-Mead from every start; the lowest objective wins, ties go to the smaller (alpha, p)"""
    if not starts:
        raise ParameterError("at least one optimizer start is required")
    wrapped = _guarded(objective)
    options = {"maxiter": config.max_iter, "xatol": config.xatol, "fatol": config.fatol}

    best = None
    for start in starts:
        res = minimize(wrapped, to_unconstrained(start), method="Nelder-Mead", options=options)
        logger.debug(f"Start ({start.alpha:.6g}, {start.p:.6g}) -> objective {res.fun:.10g} after {res.nit} iterations")
        if not math.isfinite(res.fun):
            continue
        candidate = (float(res.fun), float(res.x[0]), float(res.x[1]))
        if best is None or candidate < best[0]:
            best = (candidate, res)

    if best is None:
        logger.warning("No optimizer start reached a finite objective")
        return OptimizeOutcome(params=starts[0], value=math.inf, converged=False, iterations=0, starts_run=len(starts))

    res = best[1]
    return OptimizeOutcome(
        params=from_unconstrained(res.x),
        value=float(res.fun),
        converged=bool(res.success),
        iterations=int(res.nit),
        starts_run=len(starts)
    )


def central_hessian(f: Callable[[np.ndarray], float], x: np.ndarray, steps: np.ndarray) -> np.ndarray:
    """Second derivatives of f at x by central differences with per-coordinate steps"""
    x = np.asarray(x, dtype=float)
    k = x.size
    fx = f(x)
    hess = np.empty((k, k))
    for i in range(k):
        ei = np.zeros(k)
        ei[i] = steps[i]
        hess[i, i] = (f(x + ei) - 2 * fx + f(x - ei)) / steps[i] ** 2
        for j in range(i + 1, k):
            ej = np.zeros(k)
            ej[j] = steps[j]
            value = (f(x + ei + ej) - f(x + ei - ej) - f(x - ei + ej) + f(x - ei - ej)) / (4 * steps[i] * steps[j])
            hess[i, j] = hess[j, i] = value
    return hess
