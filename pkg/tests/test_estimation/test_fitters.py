# tests/test_estimation/test_fitters.py
import logging
import math

import numpy as np
import pytest

from src.exceptions import (
    DataError,
    DegenerateSampleError,
    InconsistentEstimateError,
    InsufficientDataError,
    MethodInapplicableError,
    ParameterError,
)
from src.distribution.schemas import Params
from src.distribution.core import proportions, survival
from src.distribution.sampling import sample
from src.moments.shape import raw_moment
from src.estimation.models import FitMethod, Sample
from src.estimation.likelihood import loglik
from src.estimation.fitters import (
    diagnostic_line,
    empirical_survival,
    estimate_p_from_survival,
    estimate_p_known_alpha,
    fit,
    fit_mle,
    fit_moments,
    fit_moments_from_raw,
    fit_proportions,
    fit_survreg,
    moment_discrepancy,
    moment_start,
    proportions_estimate,
    survival_line,
)


@pytest.fixture(scope="module")
def wide_sample() -> Sample:
    """10**4 draws from DGUD(5, 0.75)"""
    return Sample(sample(Params(alpha=5.0, p=0.75), 10_000, seed=11))


@pytest.fixture(scope="module")
def mle_fit(large_sample: Sample):
    return fit_mle(large_sample)


class TestEmpiricalSurvival:
    """Test the empirical survival convention"""

    def test_counts_ties(self) -> None:
        """Test empirical survival with repeated values"""
        y, surv, mult = empirical_survival(Sample.from_values([0, 0, 1, 3]))
        assert y.tolist() == [0, 1, 3]
        assert surv.tolist() == [1.0, 0.5, 0.25]
        assert mult.tolist() == [2, 1, 1]


class TestProportions:
    """Test the method of proportions"""

    def test_exact_inversion(self) -> None:
        """Test recovering (1, 0.5) from its exact proportions"""
        params = proportions_estimate(math.exp(-1), 1 - math.exp(-0.5))
        assert params.alpha == pytest.approx(1.0, rel=1e-12)
        assert params.p == pytest.approx(0.5, rel=1e-12)

    @pytest.mark.parametrize("p_minus,p_plus", [(0.2, 0.5), (0.4, 0.3), (0.05, 0.9)])
    def test_inverse_of_proportions(self, p_minus: float, p_plus: float) -> None:
        """Test the estimate as the inverse of the proportion map"""
        neg, _, pos = proportions(proportions_estimate(p_minus, p_plus))
        assert neg == pytest.approx(p_minus, abs=1e-12)
        assert pos == pytest.approx(p_plus, abs=1e-12)

    def test_consistent(self) -> None:
        """Test the proportion estimator on a large sample"""
        data = Sample(sample(Params(alpha=1.0, p=0.5), 100_000, seed=21))
        result = fit_proportions(data)
        assert result.method is FitMethod.PROPORTIONS
        assert result.params.alpha == pytest.approx(1.0, abs=0.05)
        assert result.params.p == pytest.approx(0.5, abs=0.05)
        assert result.se_alpha is None

    def test_all_positive_is_inapplicable(self) -> None:
        """Test a sample with no negatives"""
        with pytest.raises(MethodInapplicableError):
            fit_proportions(Sample.from_values([1, 2, 3, 5]))

    def test_no_positives_is_inapplicable(self) -> None:
        """Test a sample with no positives"""
        with pytest.raises(MethodInapplicableError):
            fit_proportions(Sample.from_values([-1, 0, -2]))

    def test_inconsistent_proportions(self) -> None:
        """Test p outside (0, 1) when positives outweigh what the negatives allow"""
        with pytest.raises(InconsistentEstimateError) as exc:
            proportions_estimate(0.6, 0.5)
        assert exc.value.diagnostic["p"] > 1


class TestSurvivalRegression:
    """Test the empirical-survival regression and its diagnostic"""

    def test_exact_model_input(self, unit_params: Params) -> None:
        """Test that exact survival values give an exact line"""
        y = np.arange(-3, 9)
        line = survival_line(y, survival(unit_params, y))
        assert line.intercept_a == pytest.approx(0.0, abs=1e-10)
        assert line.slope_b == pytest.approx(math.log(2), abs=1e-10)
        assert line.r_squared == pytest.approx(1.0, abs=1e-10)

    def test_large_sample(self, large_sample: Sample) -> None:
        """Test the regression fit on a large sample"""
        result = fit_survreg(large_sample)
        assert result.diagnostic is not None
        assert result.diagnostic.r_squared > 0.98
        assert result.params.p == pytest.approx(0.5, abs=0.05)

    def test_non_dgud_data_fits_worse(self, large_sample: Sample) -> None:
        """Test that uniform data gives a lower R2"""
        uniform = Sample(np.random.default_rng(3).integers(0, 21, size=10_000))
        assert diagnostic_line(uniform).r_squared < 0.97
        assert diagnostic_line(uniform).r_squared < diagnostic_line(large_sample).r_squared

    def test_excludes_boundary_points(self) -> None:
        """Test that y = 0 is left out of the regression"""
        line = diagnostic_line(Sample.from_values([0, 1, 1, 2, 3, 5]))
        assert 0 not in line.y.tolist()

    def test_insufficient_points(self) -> None:
        """Test a sample with too few usable points"""
        with pytest.raises(InsufficientDataError):
            fit_survreg(Sample.from_values([0, 1, 1, 2]))

    def test_increasing_survival_gives_negative_slope(self) -> None:
        """Test the slope sign for an increasing survival curve"""
        y = np.array([0, 1, 2, 3])
        surv = np.array([0.2, 0.3, 0.5, 0.7])
        line = survival_line(y, surv)
        assert line.slope_b < 0

    def test_far_location_is_inconsistent(self, large_sample: Sample) -> None:
        """Test that data near 10**6 puts alpha out of range instead of overflowing"""
        with pytest.raises(InconsistentEstimateError, match="floating-point range"):
            fit_survreg(large_sample.shifted(10**6))


class TestKnownAlpha:
    """Test the empirical estimator of p with alpha known"""

    def test_exact_survival(self, unit_params: Params) -> None:
        """Test recovering p from exact survival with alpha known"""
        y = np.arange(-3, 9)
        assert estimate_p_from_survival(y, survival(unit_params, y), 1.0) == pytest.approx(0.5, abs=1e-10)

    def test_consistent(self) -> None:
        """Test the known-alpha estimator on a large sample"""
        data = Sample(sample(Params(alpha=1.0, p=0.75), 100_000, seed=33))
        assert estimate_p_known_alpha(data, 1.0) == pytest.approx(0.75, abs=0.02)

    def test_zero_alone_is_not_identifying(self) -> None:
        """Test that a sample of zeros cannot identify p"""
        with pytest.raises(InsufficientDataError):
            estimate_p_from_survival(np.array([0]), np.array([0.6]), 1.0)

    def test_rejects_bad_alpha(self, large_sample: Sample) -> None:
        """Test a nonpositive known alpha"""
        with pytest.raises(ParameterError, match="alpha must be > 0"):
            estimate_p_known_alpha(large_sample, 0.0)


class TestMaximumLikelihood:
    """Test maximum likelihood fitting"""

    def test_consistent(self, mle_fit) -> None:
        """Test the MLE on a large sample"""
        assert mle_fit.converged
        assert mle_fit.method is FitMethod.MLE
        assert mle_fit.params.alpha == pytest.approx(1.0, abs=0.1)
        assert mle_fit.params.p == pytest.approx(0.5, abs=0.02)

    def test_standard_errors(self, mle_fit) -> None:
        """Test that standard errors are reported and small"""
        assert mle_fit.se_alpha is not None and mle_fit.se_alpha > 0
        assert mle_fit.se_p is not None and 0.001 < mle_fit.se_p < 0.006
        assert mle_fit.cov_alpha_p is not None

    def test_loglik_matches(self, mle_fit, large_sample: Sample) -> None:
        """Test that the reported log-likelihood is the sample log-likelihood"""
        assert mle_fit.loglik == pytest.approx(loglik(mle_fit.params, large_sample), rel=1e-12)

    def test_local_optimality(self, mle_fit, large_sample: Sample) -> None:
        """Test that no nearby perturbed point has a higher likelihood"""
        rng = np.random.default_rng(0)
        best = mle_fit.loglik
        for _ in range(100):
            alpha = mle_fit.params.alpha * math.exp(rng.normal(0, 0.1))
            p = min(max(mle_fit.params.p + rng.normal(0, 0.02), 1e-6), 1 - 1e-6)
            assert loglik(Params(alpha=alpha, p=p), large_sample) <= best + 1e-9

    def test_degenerate_sample_does_not_crash(self) -> None:
        """Test a sample with a single distinct value"""
        result = fit_mle(Sample.from_values([0, 0]))
        assert result.params.alpha > 0
        assert 0 < result.params.p < 1
        assert math.isfinite(result.loglik)

    def test_requires_two_observations(self) -> None:
        """Test a one-point sample"""
        with pytest.raises(InsufficientDataError):
            fit_mle(Sample.from_values([1]))

    def test_shift_equivariance(self, large_sample: Sample, mle_fit) -> None:
        """Test that shifting the data by c maps alpha to alpha p**-c"""
        shifted = fit_mle(large_sample.shifted(3))
        expected = mle_fit.params.shifted(3)
        assert shifted.params.p == pytest.approx(expected.p, rel=1e-4)
        assert shifted.params.alpha == pytest.approx(expected.alpha, rel=1e-3)

    def test_unrepresentable_alpha(self) -> None:
        """Test that a sample centred far from 0 raises a data error naming the location"""
        with pytest.raises(DataError, match=r"1e\+06"):
            fit_mle(Sample.from_values([10**6, 10**6 + 3]))

    def test_logs_start_count(self, large_sample: Sample, caplog: pytest.LogCaptureFixture) -> None:
        """Test that the closing log line reports how many optimizer starts ran"""
        with caplog.at_level(logging.INFO, logger="src.estimation.fitters"):
            fit_mle(large_sample)
        messages = [r.getMessage() for r in caplog.records if r.name == "src.estimation.fitters"]
        assert messages[-1].endswith(" from 5 starts")

    def test_unrepresentable_alpha_wide_sample(self, large_sample: Sample) -> None:
        """Test that every estimator start overflowing is reported as a data error"""
        with pytest.raises(DataError, match="floating-point range"):
            fit_mle(large_sample.shifted(10**6))


class TestMoments:
    """Test the method of moments"""

    def test_fixed_point(self, unit_params: Params) -> None:
        """Test that exact moments return the generating parameters"""
        m1 = raw_moment(unit_params, 1, eps_tail=1e-14).value
        m2 = raw_moment(unit_params, 2, eps_tail=1e-14).value
        result = fit_moments_from_raw(m1, m2)
        assert result.params.alpha == pytest.approx(1.0, abs=1e-4)
        assert result.params.p == pytest.approx(0.5, abs=1e-4)

    def test_consistent(self, wide_sample: Sample) -> None:
        """Test the moment estimator on a large sample"""
        result = fit_moments(wide_sample)
        assert result.method is FitMethod.MOMENTS
        assert result.params.p == pytest.approx(0.75, abs=0.03)
        assert result.se_alpha is None
        assert math.isfinite(result.loglik)

    def test_own_objective_beats_mle(self, large_sample: Sample, mle_fit) -> None:
        """Test that the moment fit minimizes its own discrepancy"""
        m1, m2 = large_sample.raw_moment(1), large_sample.raw_moment(2)
        result = fit_moments(large_sample)
        assert moment_discrepancy(result.params, m1, m2) <= moment_discrepancy(mle_fit.params, m1, m2)

    def test_degenerate_sample(self) -> None:
        """Test a constant sample"""
        with pytest.raises(DegenerateSampleError):
            fit_moments(Sample.from_values([3, 3, 3]))

    def test_unrepresentable_alpha(self, large_sample: Sample) -> None:
        """Test that moments far from 0 raise a data error"""
        with pytest.raises(DataError, match="floating-point range"):
            fit_moments(large_sample.shifted(10**6))

    def test_moment_start(self, unit_params: Params) -> None:
        """Test the continuous approximation used as a starting point"""
        m1 = raw_moment(unit_params, 1).value
        m2 = raw_moment(unit_params, 2).value
        start = moment_start(m1, m2)
        assert start is not None
        assert start.p == pytest.approx(0.5, abs=0.05)
        assert moment_start(0.0, 0.1) is None


class TestDispatcher:
    """Test the fit dispatcher"""

    def test_dispatches_by_name(self, large_sample: Sample) -> None:
        """Test choosing an estimator by method name"""
        assert fit(large_sample, "proportions").method is FitMethod.PROPORTIONS
        assert fit(large_sample, FitMethod.SURVREG).method is FitMethod.SURVREG

    def test_rejects_unknown_method(self, large_sample: Sample) -> None:
        """Test an unknown method name"""
        with pytest.raises(ParameterError, match="unknown method"):
            fit(large_sample, "bayes")
