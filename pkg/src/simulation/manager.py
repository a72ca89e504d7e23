# src/simulation/manager.py
import json
import logging
import math
from pathlib import Path
from typing import Any, Optional

import numpy as np

from src.constants import CI_WIDTH_FACTOR
from src.exceptions import DataFileError
from src.simulation.models import ParameterSummary, ReplicationRecord, SimCell, SimReport

logger = logging.getLogger(__name__)


class SimulationManager:
    """Collects replication records of one cell and aggregates them"""

    def __init__(self, cell: SimCell, log_path: Optional[Path] = None) -> None:
        self.cell = cell
        self.records: list[ReplicationRecord] = []
        self.log_path = log_path

    def record(self, record: ReplicationRecord) -> None:
        """Store a replication and append it to the audit log if one is set"""
        self.records.append(record)
        if record.error:
            logger.warning(f"Replication {record.index} failed: {record.error}")
        elif not record.converged:
            logger.warning(f"Replication {record.index} did not converge")

        if self.log_path is not None:
            try:
                with open(self.log_path, "a") as f:
                    f.write(json.dumps({"cell_seed": self.cell.seed, **record.to_dict()}) + "\n")
            except OSError as e:
                raise DataFileError(f"cannot write replication log {self.log_path}: {e}")

    def get_statistics(self) -> dict[str, Any]:
        converged = sum(1 for r in self.records if r.converged)
        with_se = sum(1 for r in self.records if r.has_se)
        return {
            "total_replications": len(self.records),
            "converged": converged,
            "with_standard_errors": with_se,
            "failed": len(self.records) - with_se
        }

    @staticmethod
    def _summarize(estimates: list[float], ses: list[float], covers: list[bool], truth: float) -> ParameterSummary:
        summary = ParameterSummary()
        if estimates:
            summary.mean_estimate = math.fsum(estimates) / len(estimates)
            summary.mean_bias = summary.mean_estimate - truth
        if ses:
            summary.mean_se = math.fsum(ses) / len(ses)
            summary.avg_ci_width = CI_WIDTH_FACTOR * summary.mean_se
            summary.coverage_rate = float(np.mean(covers))
        return summary

    def summarize(self) -> SimReport:
        """Aggregate over the recorded replications.

        Estimates and biases average every converged replication; standard
        errors, interval widths, coverage and covariance average only those
        with standard errors. The rest are counted in n_failed.
        """
        truth = self.cell.true_params
        converged = [r for r in self.records if r.converged]
        with_se = [r for r in converged if r.has_se]

        report = SimReport(
            cell=self.cell,
            alpha=self._summarize(
                [r.alpha_hat for r in converged],
                [r.se_alpha for r in with_se],
                [r.covers_alpha for r in with_se],
                truth.alpha
            ),
            p=self._summarize(
                [r.p_hat for r in converged],
                [r.se_p for r in with_se],
                [r.covers_p for r in with_se],
                truth.p
            ),
            mean_cov_alpha_p=math.fsum(r.cov_alpha_p for r in with_se) / len(with_se) if with_se else math.nan,
            n_failed=len(self.records) - len(with_se),
            n_converged=len(converged)
        )
        logger.info(
            f"📊 Cell alpha={truth.alpha:g}, p={truth.p:g}, n={self.cell.sample_size}: "
            f"{len(with_se)}/{len(self.records)} replications usable"
        )
        return report
