# src/moments/models.py
from dataclasses import dataclass, field, asdict
from typing import Any, Optional

from src.distribution.schemas import IntSupport


@dataclass
class RawMoment:
    """E(Y**r) over a truncated support"""
    order: int
    value: float
    truncation: IntSupport


@dataclass
class MomentSummary:
    mean: float
    variance: float
    mu3: float
    mu4: float
    hsk: float
    kurtosis_beta2: float
    mode: int
    truncation: IntSupport
    tail_mass_bound: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "mean": self.mean,
            "variance": self.variance,
            "mu3": self.mu3,
            "mu4": self.mu4,
            "hsk": self.hsk,
            "kurtosis_beta2": self.kurtosis_beta2,
            "mode": self.mode,
            "support_lo": self.truncation.lo,
            "support_hi": self.truncation.hi,
            "tail_mass_bound": self.tail_mass_bound
        }


@dataclass
class LogConcavityResult:
    holds: bool
    checked: int
    witness: Optional[int] = None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class UnimodalityResult:
    maximizers: list[int] = field(default_factory=list)
    unimodal: bool = True

    @property
    def strict(self) -> bool:
        return len(self.maximizers) == 1
