# src/distribution/core.py
"""Exact distribution functions of DGUD(alpha, p).

Every function accepts a scalar or an array of arguments and returns a
matching shape: a Python scalar for scalar input, an ndarray otherwise.
Differences of doubly-exponential terms are evaluated in factored form,

    exp(-a p**(y+1)) - exp(-a p**y) = exp(-a p**(y+1)) * (1 - exp(-a p**y (1 - p))),

so the far right tail keeps full relative precision.
"""
import logging
import math
from typing import Sequence

import numpy as np

from src.constants import (
    DEFAULT_EPS_TAIL,
    LOG_FLOOR,
    MAX_SUPPORT_WIDTH,
    SHARED_P_TOLERANCE,
)
from src.exceptions import ParameterError
from src.distribution.schemas import Params, IntSupport
from src.distribution.utils import (
    as_integer_array,
    exp_neg_exp,
    log_one_minus_exp_neg_exp,
    log_scaled_power,
    one_minus_exp_neg_exp,
    unwrap,
)

logger = logging.getLogger(__name__)


def pmf(params: Params, y: int | np.ndarray) -> float | np.ndarray:
    """Pr(Y = y) = exp(-alpha p**(y+1)) - exp(-alpha p**y)"""
    y = as_integer_array(y)
    s = log_scaled_power(params.log_alpha, params.log_p, y)
    head = exp_neg_exp(s + params.log_p)
    tail = one_minus_exp_neg_exp(s + math.log1p(-params.p))
    return unwrap(head * tail)


def log_pmf(params: Params, y: int | np.ndarray) -> float | np.ndarray:
    """log Pr(Y = y), computed without forming Pr(Y = y)"""
    y = as_integer_array(y)
    s = log_scaled_power(params.log_alpha, params.log_p, y)
    with np.errstate(over="ignore"):
        value = -np.exp(s + params.log_p) + log_one_minus_exp_neg_exp(s + math.log1p(-params.p))
    return unwrap(np.maximum(value, LOG_FLOOR))


def cdf(params: Params, y: int | np.ndarray) -> float | np.ndarray:
    """Pr(Y <= y) = exp(-alpha p**(y+1))"""
    y = as_integer_array(y)
    return unwrap(exp_neg_exp(log_scaled_power(params.log_alpha, params.log_p, y + 1)))


def survival(params: Params, y: float | np.ndarray) -> float | np.ndarray:
    """Pr(Y >= y) = 1 - exp(-alpha p**ceil(y)).

    For integer y this is 1 - exp(-alpha p**y); for non-integer y it is the
    piecewise form 1 - exp(-alpha p**(floor(y) + 1)).
    """
    arr = np.asarray(y, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ParameterError("y must be finite")
    k = np.ceil(arr)
    return unwrap(one_minus_exp_neg_exp(log_scaled_power(params.log_alpha, params.log_p, k)))


def proportions(params: Params) -> tuple[float, float, float]:
    """Probabilities of negative, zero and positive values"""
    neg = math.exp(-params.alpha)
    zero = math.exp(-params.alpha * params.p) * -math.expm1(-params.alpha * (1 - params.p))
    pos = -math.expm1(-params.alpha * params.p)
    return neg, zero, pos


def interval_prob(params: Params, a: int | np.ndarray, b: int | np.ndarray) -> float | np.ndarray:
    """Pr(a < Y <= b) = exp(-alpha p**(b+1)) - exp(-alpha p**(a+1))"""
    a = as_integer_array(a, "a")
    b = as_integer_array(b, "b")
    if np.any(a > b):
        raise ParameterError("interval requires a <= b")
    upper = exp_neg_exp(log_scaled_power(params.log_alpha, params.log_p, b + 1))
    # alpha p**(a+1) - alpha p**(b+1) = alpha p**(a+1) * (1 - p**(b-a))
    with np.errstate(divide="ignore"):
        gap = log_scaled_power(params.log_alpha, params.log_p, a + 1) + np.log(-np.expm1((b - a) * params.log_p))
    return unwrap(upper * one_minus_exp_neg_exp(gap))


def quantile(params: Params, u: float | np.ndarray) -> int | np.ndarray:
    """Smallest integer y with u <= F(y), from the closed form plus a bracket check"""
    u = np.asarray(u, dtype=float)
    if not np.all(np.isfinite(u)) or np.any((u <= 0) | (u >= 1)):
        raise ParameterError("u must be in (0, 1)")
    raw = (-params.log_alpha + np.log(-np.log(u))) / params.log_p - 1
    y = np.ceil(raw).astype(np.int64)

    # ceiling arithmetic near representable boundaries can be off by one
    y = np.where(cdf(params, y - 1) >= u, y - 1, y)
    y = np.where(cdf(params, y) < u, y + 1, y)
    return unwrap(y)


def mode(params: Params) -> int:
    """Location of the maximum of the pmf.

    Starts from floor(-log(alpha)/log(p)) and moves to a larger neighbour
    while one exists; log-concavity makes the local maximum global.
    """
    y = math.floor(-params.log_alpha / params.log_p)
    while log_pmf(params, y + 1) > log_pmf(params, y):
        y += 1
    while log_pmf(params, y - 1) > log_pmf(params, y):
        y -= 1
    return y


def hazard(params: Params, y: int | np.ndarray) -> float | np.ndarray:
    """Failure rate Pr(Y = y) / Pr(Y >= y).

    Evaluated as the definitional ratio; where the survival probability
    underflows the right-tail limit 1 - p is returned.
    """
    y = as_integer_array(y)
    f = np.asarray(pmf(params, y))
    s = np.asarray(survival(params, y))
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(s > 0, f / s, 1 - params.p)
    return unwrap(ratio)


def second_failure_rate(params: Params, y: int | np.ndarray) -> float | np.ndarray:
    """log(S(y) / S(y + 1))"""
    y = as_integer_array(y)
    s = log_scaled_power(params.log_alpha, params.log_p, y)
    return unwrap(log_one_minus_exp_neg_exp(s) - log_one_minus_exp_neg_exp(s + params.log_p))


def max_closure(params_list: Sequence[Params]) -> Params:
    """Law of the maximum of independent DGUD(alpha_i, p): DGUD(sum alpha_i, p)"""
    if not params_list:
        raise ParameterError("params_list must be nonempty")
    p = params_list[0].p
    for item in params_list[1:]:
        if abs(item.p - p) > SHARED_P_TOLERANCE:
            raise ParameterError(f"all members must share p (got {p} and {item.p})")
    return Params(alpha=math.fsum(item.alpha for item in params_list), p=p)


def int_support(params: Params, eps_tail: float = DEFAULT_EPS_TAIL) -> IntSupport:
    """Window [lo, hi] holding all but at most eps_tail of the mass"""
    if not 0 < eps_tail < 1:
        raise ParameterError(f"eps_tail must be in (0, 1) (got {eps_tail})")
    lo = quantile(params, eps_tail / 2)
    hi = quantile(params, 1 - eps_tail / 2)
    if hi - lo + 1 > MAX_SUPPORT_WIDTH:
        raise ParameterError(f"support [{lo}, {hi}] is too wide to sum over; p is too close to 1")
    return IntSupport(lo=lo, hi=hi, eps_tail=eps_tail)
