# tests/test_cli/test_run_config.py
import argparse

import pytest

from src.exceptions import ParameterError
from src.estimation.models import FitMethod
from src.cli.schemas import RunConfig
from src.cli.validators import float_list, int_list, validate_alpha, validate_eps_tail, validate_p, validate_seed


class TestValidators:
    """Test argument validators"""

    def test_alpha(self) -> None:
        """Test the alpha validator"""
        assert validate_alpha(0.01)
        assert not validate_alpha(0.0)
        assert not validate_alpha(float("inf"))

    def test_p(self) -> None:
        """Test the p validator at the open interval ends"""
        assert validate_p(0.5)
        assert not validate_p(0.0)
        assert not validate_p(1.0)

    def test_eps_tail(self) -> None:
        """Test the tail tolerance validator"""
        assert validate_eps_tail(1e-12)
        assert not validate_eps_tail(0.01)

    def test_seed(self) -> None:
        """Test the unsigned 64-bit seed range"""
        assert validate_seed(0)
        assert validate_seed(2**64 - 1)
        assert not validate_seed(-1)
        assert not validate_seed(2**64)

    def test_lists(self) -> None:
        """Test parsing of comma-separated lists"""
        assert float_list("0.5, 1,5") == [0.5, 1.0, 5.0]
        assert float_list("") == []
        assert int_list("-3,4") == [-3, 4]
        with pytest.raises(argparse.ArgumentTypeError):
            int_list("1.5")


class TestRunConfig:
    """Test RunConfig validation"""

    def test_rejects_bad_alpha(self) -> None:
        """Test that a negative alpha is refused"""
        with pytest.raises(ParameterError, match="alpha must be > 0"):
            RunConfig(command="eval", alpha=-1.0, p=0.5)

    def test_rejects_reversed_range(self) -> None:
        """Test --from greater than --to"""
        with pytest.raises(ParameterError):
            RunConfig(command="eval", y_from=3, y_to=1)

    def test_rejects_workers(self) -> None:
        """Test that zero workers is refused"""
        with pytest.raises(ParameterError):
            RunConfig(command="simulate", workers=0)

    def test_rejects_negative_seed(self) -> None:
        """Test that RunConfig refuses a negative seed"""
        with pytest.raises(ParameterError, match="seed must be in"):
            RunConfig(command="sample", seed=-1)

    def test_params_required(self) -> None:
        """Test that params() needs both alpha and p"""
        with pytest.raises(ParameterError, match="describe requires --alpha and --p"):
            RunConfig(command="describe").params()

    def test_from_namespace(self) -> None:
        """Test building a RunConfig from parsed arguments"""
        args = argparse.Namespace(command="fit", method="survreg", seed=4, eps_tail=1e-12, data=None, verbose=True)
        run = RunConfig.from_namespace(args)
        assert run.method is FitMethod.SURVREG
        assert run.seed == 4
        assert run.y == []

    def test_optimizer_overrides(self) -> None:
        """Test that --max-iter and --xatol override the defaults"""
        config = RunConfig(command="fit", max_iter=50).optimizer_config()
        assert config.max_iter == 50
        assert config.xatol > 0
