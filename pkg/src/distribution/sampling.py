# src/distribution/sampling.py
"""Seeded random variate generation.

All draws come from numpy's PCG64 bit generator seeded with an explicit
64-bit integer, so a (seed, n) pair reproduces the same variates on every
platform numpy supports.
"""
import logging

import numpy as np

from src.constants import SEED_LIMIT
from src.exceptions import ParameterError
from src.distribution.schemas import Params
from src.distribution.core import quantile

logger = logging.getLogger(__name__)

_MANTISSA = 2 ** 53


def check_seed(seed: int) -> int:
    """seed as a Python int in [0, 2**64)"""
    try:
        value = int(seed)
    except (TypeError, ValueError, OverflowError):
        value = None
    if isinstance(seed, bool) or value is None or value != seed or not 0 <= value < SEED_LIMIT:
        raise ParameterError(f"seed must be an integer in [0, 2**64) (got {seed})")
    return value


def make_generator(seed: int) -> np.random.Generator:
    """Deterministic generator for an integer seed"""
    return np.random.Generator(np.random.PCG64(check_seed(seed)))


def open_uniforms(n: int, seed: int) -> np.ndarray:
    """n uniforms strictly inside (0, 1) on a 2**-53 grid"""
    rng = make_generator(seed)
    return (rng.integers(0, _MANTISSA, size=n) + 0.5) / _MANTISSA


def _check_count(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ParameterError(f"n must be >= 1 (got {n})")
    return int(n)


def sample(params: Params, n: int, seed: int) -> np.ndarray:
    """Inverse-transform draws: quantile of seeded open uniforms"""
    n = _check_count(n)
    values = np.asarray(quantile(params, open_uniforms(n, seed)), dtype=np.int64)
    logger.debug(f"Drew {n} variates from DGUD({params.alpha}, {params.p}) with seed {seed}")
    return values


def gumbel_variates(mu: float, sigma: float, n: int, seed: int) -> np.ndarray:
    """Continuous Gumbel EV(mu, sigma) draws by inverse cdf"""
    if not np.isfinite(sigma) or sigma <= 0:
        raise ParameterError(f"sigma must be > 0 (got {sigma})")
    n = _check_count(n)
    u = open_uniforms(n, seed)
    return mu - sigma * np.log(-np.log(u))


def floor_of_continuous(mu: float, sigma: float, n: int, seed: int) -> np.ndarray:
    """Floors of continuous Gumbel draws; distributed as DGUD(p**-mu, exp(-1/sigma))"""
    return np.floor(gumbel_variates(mu, sigma, n, seed)).astype(np.int64)


def geometric_transform_survival(mu: float, sigma: float, n: int, seed: int, y_max: int) -> np.ndarray:
    """Empirical Pr(floor(exp(-(X - mu)/sigma)) >= y) for y = 0..y_max.

    exp(-(X - mu)/sigma) is standard exponential for X ~ EV(mu, sigma), so
    the floor is geometric with Pr(W >= y) = exp(-y) whatever sigma is.
    """
    x = gumbel_variates(mu, sigma, n, seed)
    w = np.floor(np.exp(-(x - mu) / sigma))
    return np.array([np.mean(w >= y) for y in range(y_max + 1)])
