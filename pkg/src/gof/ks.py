# src/gof/ks.py
"""Kolmogorov-Smirnov test of integer data against DGUD(alpha, p).

Both the ecdf and the model cdf are step functions jumping only at integers,
so the supremum of |ecdf - cdf| over the real line is attained at a sample
value v or just below it (at v - 1), or in a tail beyond the sample range
where it is bounded by the model tail mass.
"""
import logging
import math

import numpy as np
from scipy.special import kolmogorov

from src.distribution.schemas import Params
from src.distribution.core import cdf
from src.distribution.utils import unwrap
from src.estimation.models import Sample
from src.gof.models import GofReport

logger = logging.getLogger(__name__)


def ecdf(sample: Sample, y: int | np.ndarray) -> float | np.ndarray:
    """#{y_i <= y}/n, right-continuous"""
    values, multiplicity = sample.sorted_unique
    cumulative = np.concatenate(([0], np.cumsum(multiplicity)))
    idx = np.searchsorted(values, np.asarray(y), side="right")
    return unwrap(cumulative[idx] / sample.n)


def ks_statistic(
    ecdf_right: np.ndarray,
    ecdf_left: np.ndarray,
    cdf_right: np.ndarray,
    cdf_left: np.ndarray
) -> float:
    """max(|ecdf(v) - cdf(v)|, |ecdf(v-1) - cdf(v-1)|) over the probe points v"""
    right = np.abs(np.asarray(ecdf_right) - np.asarray(cdf_right))
    left = np.abs(np.asarray(ecdf_left) - np.asarray(cdf_left))
    if right.size == 0:
        return 0.0
    return float(np.clip(max(right.max(), left.max()), 0.0, 1.0))


def pvalue_lower_bound(n: int, d: float) -> float:
    """Asymptotic Kolmogorov survival at sqrt(n) D; conservative for discrete models"""
    return float(np.clip(kolmogorov(math.sqrt(n) * d), 0.0, 1.0))


def abs_diff_curve(sample: Sample, params: Params) -> list[tuple[int, float]]:
    """|ecdf(y) - cdf(y)| at each distinct sample value, ascending in y"""
    values, _ = sample.sorted_unique
    diff = np.abs(np.asarray(ecdf(sample, values)) - np.asarray(cdf(params, values)))
    return [(int(v), float(d)) for v, d in zip(values, diff)]


def ks_test(sample: Sample, params: Params) -> GofReport:
    values, _ = sample.sorted_unique
    d = ks_statistic(
        ecdf(sample, values),
        ecdf(sample, values - 1),
        cdf(params, values),
        cdf(params, values - 1)
    )
    tail_mass = cdf(params, int(values[0]) - 1) + 1 - cdf(params, int(values[-1]))

    report = GofReport(
        ks_stat=d,
        pvalue_lower_bound=pvalue_lower_bound(sample.n, d),
        n=sample.n,
        fitted=params,
        abs_diff_points=abs_diff_curve(sample, params),
        tail_mass=tail_mass
    )
    logger.info(f"KS test on n={sample.n}: D={d:.6g}, p-value bound={report.pvalue_lower_bound:.6g}")
    return report
