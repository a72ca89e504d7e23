# src/estimation/likelihood.py
import logging
import math
from typing import Optional

import numpy as np

from src.distribution.schemas import Params
from src.distribution.core import log_pmf
from src.estimation.models import Sample
from src.estimation.optimizer import central_hessian

logger = logging.getLogger(__name__)


def loglik(params: Params, sample: Sample) -> float:
    """Sum of log pmf over the sample, one term per distinct value"""
    values, multiplicity = sample.sorted_unique
    terms = multiplicity * np.asarray(log_pmf(params, values))
    try:
        return math.fsum(terms)
    except OverflowError:
        return -math.inf


def _loglik_at(point: np.ndarray, sample: Sample) -> float:
    try:
        return loglik(Params(alpha=point[0], p=point[1]), sample)
    except ValueError:
        return -math.inf


def observed_information(params: Params, sample: Sample) -> tuple[np.ndarray, Optional[np.ndarray]]:
    """Negative central-difference Hessian of loglik on the (alpha, p) scale.

    Returns the information matrix and its inverse, or None in place of the
    inverse when the matrix is not positive definite.
    """
    point = np.array([params.alpha, params.p])
    steps = np.maximum(1e-5, 1e-5 * np.abs(point))
    # keep every probe inside alpha > 0 and 0 < p < 1
    steps[0] = min(steps[0], 0.5 * params.alpha)
    steps[1] = min(steps[1], 0.5 * params.p, 0.5 * (1 - params.p))

    info = -central_hessian(lambda x: _loglik_at(x, sample), point, steps)
    if not np.all(np.isfinite(info)):
        logger.warning(f"Observed information is not finite at alpha={params.alpha}, p={params.p}")
        return info, None
    try:
        np.linalg.cholesky(info)
    except np.linalg.LinAlgError:
        logger.warning(f"Observed information is not positive definite at alpha={params.alpha}, p={params.p}")
        return info, None
    return info, np.linalg.inv(info)
