# tests/conftest.py
import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from src.constants import GRID_ALPHAS, GRID_PS
from src.distribution.schemas import Params
from src.distribution.sampling import sample
from src.estimation.models import Sample
from src.cli.datafile import DataFile

GRID = [Params(alpha=a, p=p) for a in GRID_ALPHAS for p in GRID_PS]
GRID_IDS = [f"a{a}-p{p}" for a in GRID_ALPHAS for p in GRID_PS]


@pytest.fixture
def unit_params() -> Params:
    """DGUD(1, 0.5)"""
    return Params(alpha=1.0, p=0.5)


@pytest.fixture(scope="session")
def large_sample() -> Sample:
    """10**4 draws from DGUD(1, 0.5) with seed 7"""
    return Sample(sample(Params(alpha=1.0, p=0.5), 10_000, seed=7))


@pytest.fixture
def data_file(tmp_path: Path, large_sample: Sample) -> Path:
    """The large sample written as a data file"""
    path = tmp_path / "synthetic.txt"
    DataFile(path).write(large_sample.values, seed=7)
    return path
