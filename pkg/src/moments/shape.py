# src/moments/shape.py
"""Moments, shape measures and structural checks of DGUD(alpha, p).

There is no closed form for the moments, so every moment is a truncated sum
over an IntSupport chosen from exact tail quantiles; the truncation and its
tail-mass bound travel with the result.
"""
import logging
import math
from typing import Sequence

import numpy as np
import pandas as pd

from src.constants import (
    DEFAULT_EPS_TAIL,
    EULER_GAMMA,
    MAX_EPS_TAIL,
    PI_SQUARED_OVER_6,
    VARIANCE_SLACK,
)
from src.exceptions import ParameterError
from src.distribution.schemas import Params, IntSupport
from src.distribution.core import int_support, log_pmf, mode, pmf
from src.distribution.utils import log_one_minus_exp_neg_exp, unwrap
from src.moments.models import (
    LogConcavityResult,
    MomentSummary,
    RawMoment,
    UnimodalityResult,
)

logger = logging.getLogger(__name__)

LOG_CONCAVITY_SLACK = 1e-12


def _check_eps_tail(eps_tail: float) -> None:
    if not 0 < eps_tail < MAX_EPS_TAIL:
        raise ParameterError(f"eps_tail must be in (0, {MAX_EPS_TAIL}) (got {eps_tail})")


def _support_pmf(params: Params, eps_tail: float) -> tuple[IntSupport, np.ndarray, np.ndarray]:
    support = int_support(params, eps_tail)
    y = support.values()
    return support, y, np.asarray(pmf(params, y))


def raw_moments(params: Params, orders: Sequence[int], eps_tail: float = DEFAULT_EPS_TAIL) -> list[float]:
    """E(Y**r) for each r in orders, sharing one truncated pmf evaluation"""
    _check_eps_tail(eps_tail)
    _, y, f = _support_pmf(params, eps_tail)
    yf = y.astype(float)
    return [math.fsum(yf ** r * f) for r in orders]


def raw_moment(params: Params, r: int, eps_tail: float = DEFAULT_EPS_TAIL) -> RawMoment:
    """r-th moment about the origin, with the truncation used"""
    if isinstance(r, bool) or int(r) != r or r < 1:
        raise ParameterError(f"r must be a positive integer (got {r})")
    _check_eps_tail(eps_tail)
    support, y, f = _support_pmf(params, eps_tail)
    value = math.fsum(y.astype(float) ** int(r) * f)
    return RawMoment(order=int(r), value=value, truncation=support)


def _central_moments(y: np.ndarray, f: np.ndarray, center: int) -> tuple[float, float, float, float]:
    """Mean and central moments 2-4, accumulated about an integer center"""
    d = (y - center).astype(float)
    m1, m2, m3, m4 = (math.fsum(d ** k * f) for k in (1, 2, 3, 4))
    mu2 = m2 - m1 ** 2
    mu3 = m3 - 3 * m1 * m2 + 2 * m1 ** 3
    mu4 = m4 - 4 * m1 * m3 + 6 * m1 ** 2 * m2 - 3 * m1 ** 4
    return center + m1, mu2, mu3, mu4


def hsk(pmf_values: Sequence[float] | np.ndarray, mode_index: int) -> float:
    """Homogeneous skewness of a unimodal pmf given as a sequence.

    HSK = sum_{y>0} [f(M+y) - f(M-y)] + f(M) * sign(sum_{y>0} [f(M+y) - f(M-y)]),
    with terms outside the sequence counted as zero.
    """
    f = np.asarray(pmf_values, dtype=float)
    if f.ndim != 1 or f.size == 0 or np.any(f < 0):
        raise ParameterError("pmf values must be a nonempty 1-D sequence of probabilities")
    if abs(math.fsum(f) - 1) > 1e-8:
        raise ParameterError(f"pmf values must sum to 1 (got {math.fsum(f)})")
    if not 0 <= mode_index < f.size or f[mode_index] < f.max() * (1 - 1e-12):
        raise ParameterError(f"mode_index {mode_index} is not an argmax of the pmf")

    excess = math.fsum(f[mode_index + 1:]) - math.fsum(f[:mode_index])
    value = excess + f[mode_index] * np.sign(excess)
    return float(np.clip(value, -1.0, 1.0))


def moment_summary(params: Params, eps_tail: float = DEFAULT_EPS_TAIL) -> MomentSummary:
    """Mean, central moments, HSK and kurtosis over a truncated support"""
    _check_eps_tail(eps_tail)
    support, y, f = _support_pmf(params, eps_tail)
    m = mode(params)
    mean, mu2, mu3, mu4 = _central_moments(y, f, m)

    return MomentSummary(
        mean=mean,
        variance=mu2,
        mu3=mu3,
        mu4=mu4,
        hsk=hsk(f / math.fsum(f), m - support.lo),
        kurtosis_beta2=mu4 / mu2 ** 2,
        mode=m,
        truncation=support,
        tail_mass_bound=eps_tail
    )


def continuous_moments(params: Params) -> tuple[float, float]:
    """Mean and variance of the continuous Gumbel variable behind DGUD(alpha, p)"""
    return params.mu + EULER_GAMMA * params.sigma, PI_SQUARED_OVER_6 * params.sigma ** 2


def mean_bounds(params: Params) -> tuple[float, float]:
    """[E(X) - 1, E(X)]: Y = X - U with U in (0, 1)"""
    center, _ = continuous_moments(params)
    return center - 1, center


def variance_bounds(params: Params, slack: float = VARIANCE_SLACK) -> tuple[float, float]:
    """[Var(X), Var(X) + 1/4 + slack]"""
    _, var_x = continuous_moments(params)
    return var_x, var_x + 0.25 + slack


def approximate_moments(params: Params) -> tuple[float, float]:
    """Mean and variance approximations E(X) - 1/2 and Var(X) + 1/8"""
    center, var_x = continuous_moments(params)
    return center - 0.5, var_x + 0.125


def check_log_concavity(params: Params, lo: int, hi: int) -> LogConcavityResult:
    """Check pmf(y+1)**2 >= pmf(y) pmf(y+2) for y in [lo, hi-2], in log space"""
    if lo >= hi:
        raise ParameterError(f"log-concavity check requires lo < hi (got [{lo}, {hi}])")
    y = np.arange(lo, hi + 1, dtype=np.int64)
    lf = np.asarray(log_pmf(params, y))
    if lf.size < 3:
        return LogConcavityResult(holds=True, checked=0)

    curvature = 2 * lf[1:-1] - lf[:-2] - lf[2:]
    bad = np.flatnonzero(curvature < math.log1p(-LOG_CONCAVITY_SLACK))
    if bad.size:
        witness = int(y[bad[0]])
        logger.warning(f"Log-concavity violated at y={witness} for DGUD({params.alpha}, {params.p})")
        return LogConcavityResult(holds=False, checked=int(curvature.size), witness=witness)
    return LogConcavityResult(holds=True, checked=int(curvature.size))


def check_log_concave_sequence(values: Sequence[float] | np.ndarray) -> LogConcavityResult:
    """Generic check f[i+1]**2 >= f[i] f[i+2]; the witness is the index i"""
    f = np.asarray(values, dtype=float)
    if f.size < 3:
        return LogConcavityResult(holds=True, checked=0)
    lhs = f[1:-1] ** 2
    rhs = f[:-2] * f[2:] * (1 - LOG_CONCAVITY_SLACK)
    bad = np.flatnonzero(lhs < rhs)
    if bad.size:
        return LogConcavityResult(holds=False, checked=int(lhs.size), witness=int(bad[0]))
    return LogConcavityResult(holds=True, checked=int(lhs.size))


def check_unimodality(params: Params, lo: int, hi: int) -> UnimodalityResult:
    """Brute-force scan: maximizing points and monotonicity on either side"""
    if lo >= hi:
        raise ParameterError(f"unimodality check requires lo < hi (got [{lo}, {hi}])")
    y = np.arange(lo, hi + 1, dtype=np.int64)
    f = np.asarray(pmf(params, y))
    top = f.max()
    at_top = np.flatnonzero(f >= top * (1 - 1e-14))
    first, last = int(at_top[0]), int(at_top[-1])

    tol = top * 1e-15
    rising = bool(np.all(np.diff(f[:first + 1]) >= -tol))
    falling = bool(np.all(np.diff(f[last:]) <= tol))
    return UnimodalityResult(
        maximizers=[int(v) for v in y[at_top]],
        unimodal=rising and falling and last - first == at_top.size - 1
    )


def tail_ratio(params: Params, y: int | np.ndarray) -> float | np.ndarray:
    """pmf(y+1)/pmf(y); tends to p as y grows"""
    y = np.asarray(y, dtype=np.int64)
    with np.errstate(over="ignore"):
        ratio = np.exp(np.asarray(log_pmf(params, y + 1)) - np.asarray(log_pmf(params, y)))
    return unwrap(ratio)


def mean_residual_life(params: Params, y: int, eps_tail: float = DEFAULT_EPS_TAIL) -> float:
    """E[Y - y | Y >= y] = sum_{k>y} S(k)/S(y)"""
    _check_eps_tail(eps_tail)
    support = int_support(params, eps_tail)
    # S(k)/S(y) decays like p**(k-y) beyond the support
    upper = max(support.hi, y) + math.ceil(math.log(eps_tail) / params.log_p) + 1
    k = np.arange(y + 1, upper + 1, dtype=np.int64)
    log_s = log_one_minus_exp_neg_exp(params.log_alpha + k * params.log_p)
    log_sy = log_one_minus_exp_neg_exp(params.log_alpha + y * params.log_p)
    return math.fsum(np.exp(log_s - log_sy))


def moment_grid(
    alpha_grid: Sequence[float],
    p_grid: Sequence[float],
    eps_tail: float = DEFAULT_EPS_TAIL
) -> pd.DataFrame:
    """Mean and variance over a parameter grid, rows p-major then alpha"""
    if len(alpha_grid) == 0 or len(p_grid) == 0:
        raise ParameterError("alpha and p grids must be nonempty")
    _check_eps_tail(eps_tail)

    rows: list[dict[str, float]] = []
    for p in p_grid:
        for alpha in alpha_grid:
            params = Params(alpha=alpha, p=p)
            _, y, f = _support_pmf(params, eps_tail)
            mean, variance, _, _ = _central_moments(y, f, mode(params))
            rows.append({"alpha": params.alpha, "p": params.p, "mean": mean, "variance": variance})

    logger.info(f"📊 Computed moment grid with {len(rows)} cells")
    return pd.DataFrame(rows, columns=["alpha", "p", "mean", "variance"])


def variance_alpha_spread(p: float, alpha_grid: Sequence[float], eps_tail: float = DEFAULT_EPS_TAIL) -> float:
    """Relative spread (max - min)/mean of the variance across alpha at fixed p"""
    frame = moment_grid(alpha_grid, [p], eps_tail)
    variances = frame["variance"].to_numpy()
    return float((variances.max() - variances.min()) / variances.mean())
