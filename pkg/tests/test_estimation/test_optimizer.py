# tests/test_estimation/test_optimizer.py
import math

import numpy as np
import pytest

from src.exceptions import ParameterError
from src.distribution.schemas import Params
from src.estimation.optimizer import (
    OptimizerConfig,
    central_hessian,
    from_unconstrained,
    grid_starts,
    multistart_minimize,
    to_unconstrained,
)


def bowl(params: Params) -> float:
    return (params.alpha - 2.0) ** 2 + (params.p - 0.3) ** 2


class TestOptimizerConfig:
    """Test OptimizerConfig"""

    def test_defaults(self) -> None:
        """Test the default optimizer settings"""
        config = OptimizerConfig()
        assert config.max_iter == 2000
        assert config.xatol == 1e-8
        assert config.n_starts == 3

    @pytest.mark.parametrize("kwargs", [{"max_iter": 0}, {"xatol": 0.0}, {"n_starts": 0}])
    def test_rejects_invalid(self, kwargs: dict) -> None:
        """Test invalid iteration limits and tolerances"""
        with pytest.raises(ParameterError):
            OptimizerConfig(**kwargs)

    def test_from_config(self) -> None:
        """Test building the optimizer settings from configuration"""
        config = OptimizerConfig.from_config()
        assert config.max_iter >= 1


class TestTransforms:
    """Test the unconstrained parameterization"""

    @pytest.mark.parametrize("alpha,p", [(0.05, 0.25), (1.0, 0.5), (300.0, 0.999)])
    def test_round_trip(self, alpha: float, p: float) -> None:
        """Test the map to and from unconstrained coordinates"""
        params = from_unconstrained(to_unconstrained(Params(alpha=alpha, p=p)))
        assert params.alpha == pytest.approx(alpha, rel=1e-12)
        assert params.p == pytest.approx(p, rel=1e-12)

    def test_every_point_is_valid(self) -> None:
        """Test that any unconstrained point maps into the parameter space"""
        for theta in ([-5.0, -5.0], [5.0, 5.0], [0.0, 0.0]):
            params = from_unconstrained(np.array(theta))
            assert params.alpha > 0
            assert 0 < params.p < 1


class TestMultistart:
    """Test the multi-start simplex search"""

    def test_finds_minimum(self) -> None:
        """Test multistart search on a smooth bowl"""
        starts = [Params(alpha=0.5, p=0.8), Params(alpha=5.0, p=0.1)]
        outcome = multistart_minimize(bowl, starts, OptimizerConfig())
        assert outcome.converged
        assert outcome.params.alpha == pytest.approx(2.0, abs=1e-5)
        assert outcome.params.p == pytest.approx(0.3, abs=1e-5)
        assert outcome.starts_run == 2

    def test_deterministic(self) -> None:
        """Test that repeated runs agree exactly"""
        starts = [Params(alpha=0.5, p=0.8), Params(alpha=5.0, p=0.1)]
        first = multistart_minimize(bowl, starts, OptimizerConfig())
        second = multistart_minimize(bowl, list(reversed(starts)), OptimizerConfig())
        assert first.value == pytest.approx(second.value, abs=1e-12)

    def test_infinite_objective_is_reported(self) -> None:
        """Test an objective that is infinite everywhere"""
        outcome = multistart_minimize(lambda params: math.inf, [Params(alpha=1.0, p=0.5)], OptimizerConfig(max_iter=20))
        assert not outcome.converged
        assert outcome.value == math.inf

    def test_objective_errors_are_contained(self) -> None:
        """Test that parameter errors inside the objective count as infinity"""
        def picky(params: Params) -> float:
            if params.alpha > 3:
                raise ParameterError("out of range")
            return bowl(params)

        outcome = multistart_minimize(picky, [Params(alpha=1.0, p=0.5)], OptimizerConfig())
        assert outcome.params.alpha == pytest.approx(2.0, abs=1e-5)

    def test_requires_starts(self) -> None:
        """Test an empty list of starts"""
        with pytest.raises(ParameterError):
            multistart_minimize(bowl, [], OptimizerConfig())

    def test_grid_starts(self) -> None:
        """Test the coarse starting grid"""
        starts = grid_starts(bowl, 0.0, OptimizerConfig(n_starts=4))
        assert len(starts) == 4
        values = [bowl(s) for s in starts]
        assert values == sorted(values)


class TestCentralHessian:
    """Test the finite-difference Hessian"""

    def test_quadratic(self) -> None:
        """Test the finite-difference Hessian of a quadratic"""
        def f(x: np.ndarray) -> float:
            return 3 * x[0] ** 2 + 2 * x[0] * x[1] + 5 * x[1] ** 2

        hess = central_hessian(f, np.array([0.4, -0.2]), np.array([1e-4, 1e-4]))
        assert np.allclose(hess, [[6, 2], [2, 10]], atol=1e-5)
