# src/estimation/fitters.py
"""The four estimators of (alpha, p) and a dispatcher over them.

Closed forms (proportions, survival regression, known-alpha survival) are
exposed as kernels taking plain arrays, so they can be checked on exact
model input; the sample-level functions compute empirical quantities and
delegate to them.
"""
import logging
import math
from typing import Optional

import numpy as np

from src.constants import EULER_GAMMA, PI_SQUARED_OVER_6
from src.exceptions import (
    DGUDException,
    DataError,
    DegenerateSampleError,
    InconsistentEstimateError,
    InsufficientDataError,
    MethodInapplicableError,
    ParameterError,
)
from src.distribution.schemas import Params
from src.moments.shape import raw_moments
from src.estimation.models import DiagnosticLine, FitMethod, FitResult, Sample
from src.estimation.likelihood import loglik, observed_information
from src.estimation.optimizer import (
    OptimizerConfig,
    grid_starts,
    multistart_minimize,
)

logger = logging.getLogger(__name__)

MOMENT_EPS_TAIL = 1e-12


def _require_size(sample: Sample, minimum: int = 2) -> None:
    if sample.n < minimum:
        raise InsufficientDataError(f"at least {minimum} observations are required (got {sample.n})")


def _require_starts(starts: list[Params], location: float) -> None:
    if not starts:
        raise DataError(
            f"no finite starting point: alpha for data centred at {location:.6g} is outside floating-point range; "
            f"shift the data toward 0"
        )


def empirical_survival(sample: Sample) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Distinct values, #{y_i >= y}/n at each of them, and multiplicities"""
    values, multiplicity = sample.sorted_unique
    below = np.concatenate(([0], np.cumsum(multiplicity)[:-1]))
    return values, (sample.n - below) / sample.n, multiplicity


def proportions_estimate(p_minus: float, p_plus: float) -> Params:
    """Invert exp(-alpha) = p_minus and 1 - exp(-alpha p) = p_plus"""
    if not 0 < p_minus < 1:
        raise MethodInapplicableError(f"proportion of negatives must be in (0, 1) (got {p_minus})")
    if not 0 < p_plus < 1:
        raise MethodInapplicableError(f"proportion of positives must be in (0, 1) (got {p_plus})")

    alpha = -math.log(p_minus)
    p = math.log1p(-p_plus) / math.log(p_minus)
    if not 0 < p < 1:
        raise InconsistentEstimateError(
            f"proportions give p = {p:.6g} outside (0, 1)",
            diagnostic={"p_minus": p_minus, "p_plus": p_plus, "p": p}
        )
    return Params(alpha=alpha, p=p)


def survival_line(y: np.ndarray, surv: np.ndarray, weights: Optional[np.ndarray] = None) -> DiagnosticLine:
    """Weighted least squares of z = -log(-log(1 - S(y))) on y.

    Points with S outside (0, 1) are dropped; under the model the line is
    exact with a = -log(alpha) and b = -log(p).
    """
    y = np.asarray(y, dtype=np.int64)
    surv = np.asarray(surv, dtype=float)
    weights = np.ones(y.size) if weights is None else np.asarray(weights, dtype=float)

    keep = (surv > 0) & (surv < 1)
    if np.count_nonzero(keep) < 3:
        raise InsufficientDataError(
            f"at least 3 points with survival in (0, 1) are required (got {np.count_nonzero(keep)})"
        )
    y, surv, weights = y[keep], surv[keep], weights[keep]
    z = -np.log(-np.log1p(-surv))

    x = y.astype(float)
    x_bar = np.average(x, weights=weights)
    z_bar = np.average(z, weights=weights)
    sxx = np.sum(weights * (x - x_bar) ** 2)
    b = np.sum(weights * (x - x_bar) * (z - z_bar)) / sxx
    a = z_bar - b * x_bar

    ss_res = np.sum(weights * (z - a - b * x) ** 2)
    ss_tot = np.sum(weights * (z - z_bar) ** 2)
    r_squared = float(np.clip(1 - ss_res / ss_tot, 0.0, 1.0)) if ss_tot > 0 else 1.0
    return DiagnosticLine(y=y, z=z, intercept_a=float(a), slope_b=float(b), r_squared=r_squared)


def diagnostic_line(sample: Sample) -> DiagnosticLine:
    """Empirical-survival diagnostic line of a sample"""
    y, surv, multiplicity = empirical_survival(sample)
    return survival_line(y, surv, multiplicity)


def estimate_p_from_survival(
    y: np.ndarray,
    surv: np.ndarray,
    alpha: float,
    weights: Optional[np.ndarray] = None
) -> float:
    """p from alpha p**y = -log(1 - S(y)), averaged in log space over usable y != 0"""
    if not math.isfinite(alpha) or alpha <= 0:
        raise ParameterError(f"alpha must be > 0 (got {alpha})")
    y = np.asarray(y, dtype=np.int64)
    surv = np.asarray(surv, dtype=float)
    weights = np.ones(y.size) if weights is None else np.asarray(weights, dtype=float)

    keep = (surv > 0) & (surv < 1) & (y != 0)
    if not np.any(keep):
        raise InsufficientDataError("no observation with y != 0 and survival in (0, 1)")
    y, surv, weights = y[keep], surv[keep], weights[keep]

    log_p = (np.log(-np.log1p(-surv)) - math.log(alpha)) / y
    p = math.exp(np.average(log_p, weights=weights))
    if not 0 < p < 1:
        raise InconsistentEstimateError(f"survival inversion gives p = {p:.6g} outside (0, 1)")
    return p


def estimate_p_known_alpha(sample: Sample, alpha: float) -> float:
    """Empirical-survival estimator of p when alpha is known"""
    y, surv, multiplicity = empirical_survival(sample)
    return estimate_p_from_survival(y, surv, alpha, multiplicity)


def moment_start(m1: float, m2: float) -> Optional[Params]:
    """Invert mean ~ E(X) - 1/2 and variance ~ Var(X) + 1/8; None if not invertible"""
    sigma_sq = (m2 - m1 ** 2 - 0.125) / PI_SQUARED_OVER_6
    if not math.isfinite(sigma_sq) or sigma_sq <= 0:
        return None
    sigma = math.sqrt(sigma_sq)
    try:
        return Params.from_location_scale(m1 + 0.5 - EULER_GAMMA * sigma, sigma)
    except (ParameterError, OverflowError):
        return None


def moment_discrepancy(params: Params, m1: float, m2: float) -> float:
    """Squared distance between theoretical and target first two raw moments"""
    try:
        t1, t2 = raw_moments(params, [1, 2], MOMENT_EPS_TAIL)
    except ParameterError:
        return math.inf
    return (t1 - m1) ** 2 + (t2 - m2) ** 2


def fit_proportions(sample: Sample) -> FitResult:
    """Method of proportions from the observed fractions of negatives and positives"""
    n_neg, _, n_pos = sample.counts
    params = proportions_estimate(n_neg / sample.n, n_pos / sample.n)
    logger.info(f"Fitted proportions on n={sample.n}: alpha={params.alpha:.6g}, p={params.p:.6g}")
    return FitResult(params=params, method=FitMethod.PROPORTIONS, loglik=loglik(params, sample))


def fit_survreg(sample: Sample) -> FitResult:
    """Empirical-survival regression; the diagnostic line is attached"""
    line = diagnostic_line(sample)
    if line.slope_b <= 0:
        raise InconsistentEstimateError(
            f"survival regression slope {line.slope_b:.6g} implies p >= 1",
            diagnostic=line
        )
    try:
        alpha = math.exp(-line.intercept_a)
    except OverflowError:
        alpha = math.inf
    if not 0 < alpha < math.inf:
        raise InconsistentEstimateError(
            f"survival regression intercept {line.intercept_a:.6g} puts alpha outside floating-point range",
            diagnostic=line
        )
    params = Params(alpha=alpha, p=math.exp(-line.slope_b))
    logger.info(f"Fitted survreg on n={sample.n}: alpha={params.alpha:.6g}, p={params.p:.6g}, R2={line.r_squared:.6g}")
    return FitResult(params=params, method=FitMethod.SURVREG, loglik=loglik(params, sample), diagnostic=line)


def _analytic_starts(sample: Sample) -> list[Params]:
    starts: list[Params] = []
    for fitter in (fit_proportions, fit_survreg):
        try:
            starts.append(fitter(sample).params)
        except DGUDException as e:
            logger.debug(f"Skipping {fitter.__name__} start: {e}")
    start = moment_start(sample.raw_moment(1), sample.raw_moment(2))
    if start is not None:
        starts.append(start)
    return starts


def fit_mle(sample: Sample, config: Optional[OptimizerConfig] = None) -> FitResult:
    """Maximum likelihood with observed-information standard errors"""
    _require_size(sample)
    config = config or OptimizerConfig.from_config()
    logger.info(f"Fitting mle on n={sample.n}")

    def objective(params: Params) -> float:
        return -loglik(params, sample)

    starts = _analytic_starts(sample) + grid_starts(objective, sample.median, config)
    _require_starts(starts, sample.median)
    outcome = multistart_minimize(objective, starts, config)

    result = FitResult(
        params=outcome.params,
        method=FitMethod.MLE,
        loglik=-outcome.value,
        converged=outcome.converged,
        iterations=outcome.iterations,
        objective=outcome.value
    )
    if not outcome.converged:
        logger.warning(f"MLE did not converge after {outcome.iterations} iterations")
        result.notes.append("optimizer did not converge; best point returned")

    if math.isfinite(outcome.value):
        _, cov = observed_information(outcome.params, sample)
        if cov is None:
            result.notes.append("observed information not positive definite; standard errors omitted")
        else:
            result.se_alpha = math.sqrt(cov[0, 0])
            result.se_p = math.sqrt(cov[1, 1])
            result.cov_alpha_p = float(cov[0, 1])

    logger.info(
        f"MLE alpha={result.params.alpha:.6g}, p={result.params.p:.6g}, "
        f"loglik={result.loglik:.10g}, converged={result.converged} from {outcome.starts_run} starts"
    )
    return result


def fit_moments_from_raw(m1: float, m2: float, config: Optional[OptimizerConfig] = None) -> FitResult:
    """Least-squares moment matching for given first and second raw moments"""
    if not m2 - m1 ** 2 > 0:
        raise DegenerateSampleError(f"moments imply zero variance (m1={m1}, m2={m2})")
    config = config or OptimizerConfig.from_config()

    def objective(params: Params) -> float:
        return moment_discrepancy(params, m1, m2)

    starts = grid_starts(objective, m1, config)
    start = moment_start(m1, m2)
    if start is not None:
        starts.insert(0, start)
    _require_starts(starts, m1)
    outcome = multistart_minimize(objective, starts, config)

    result = FitResult(
        params=outcome.params,
        method=FitMethod.MOMENTS,
        loglik=math.nan,
        converged=outcome.converged,
        iterations=outcome.iterations,
        objective=outcome.value
    )
    if not outcome.converged:
        logger.warning(f"Moment matching did not converge after {outcome.iterations} iterations")
        result.notes.append("optimizer did not converge; best point returned")
    return result


def fit_moments(sample: Sample, config: Optional[OptimizerConfig] = None) -> FitResult:
    """Method of moments by minimizing the squared raw-moment discrepancy"""
    _require_size(sample)
    if sample.variance <= 0:
        raise DegenerateSampleError("sample variance is zero; moments cannot identify (alpha, p)")
    logger.info(f"Fitting moments on n={sample.n}")
    result = fit_moments_from_raw(sample.raw_moment(1), sample.raw_moment(2), config)
    result.loglik = loglik(result.params, sample)
    logger.info(f"Moments alpha={result.params.alpha:.6g}, p={result.params.p:.6g}")
    return result


def fit(sample: Sample, method: FitMethod | str, config: Optional[OptimizerConfig] = None) -> FitResult:
    """Dispatch to one of the four estimators"""
    try:
        method = FitMethod(method)
    except ValueError:
        raise ParameterError(f"unknown method {method!r}; choose from {[m.value for m in FitMethod]}")

    if method is FitMethod.MLE:
        return fit_mle(sample, config)
    if method is FitMethod.MOMENTS:
        return fit_moments(sample, config)
    if method is FitMethod.PROPORTIONS:
        return fit_proportions(sample)
    return fit_survreg(sample)
