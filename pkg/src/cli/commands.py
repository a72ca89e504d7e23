# src/cli/commands.py
import logging
import sys
import time

import numpy as np
import pandas as pd

from src.constants import EXIT_OK, GRID_ALPHAS, GRID_PS
from src.exceptions import ParameterError
from src.distribution.core import cdf, hazard, pmf, proportions, quantile, survival
from src.distribution.sampling import sample
from src.moments.shape import moment_grid, moment_summary
from src.estimation.fitters import diagnostic_line, fit
from src.estimation.models import FitMethod
from src.gof.ks import ks_test
from src.simulation.models import SimCell
from src.simulation.runner import default_grid, run_grid
from src.reporting.render import open_output, render_record
from src.reporting.tables import simulation_table, write_csv
from src.cli.datafile import DataFile
from src.cli.schemas import RunConfig

logger = logging.getLogger(__name__)


def _emit(run: RunConfig, text: str) -> None:
    with open_output(run.output) as stream:
        stream.write(text)


def cmd_eval(run: RunConfig) -> int:
    """y, pmf, cdf, survival and hazard at the requested points"""
    params = run.params()
    if run.y:
        ys = np.asarray(run.y, dtype=np.int64)
    elif run.y_from is not None and run.y_to is not None:
        ys = np.arange(run.y_from, run.y_to + 1, dtype=np.int64)
    else:
        raise ParameterError("eval requires --y or both --from and --to")

    frame = pd.DataFrame({
        "y": ys,
        "pmf": pmf(params, ys),
        "cdf": cdf(params, ys),
        "survival": survival(params, ys),
        "hazard": hazard(params, ys)
    })
    write_csv(frame, run.output, run.seed)
    return EXIT_OK


def cmd_sample(run: RunConfig) -> int:
    """Seeded draws, one per line, and a summary on standard error"""
    params = run.params()
    if run.n is None:
        raise ParameterError("sample requires --n")
    values = sample(params, run.n, run.seed)
    DataFile(run.output).write(values, run.seed)

    n_neg = int(np.count_nonzero(values < 0))
    n_zero = int(np.count_nonzero(values == 0))
    summary = {
        "n": run.n,
        "n_neg": n_neg,
        "n_zero": n_zero,
        "n_pos": run.n - n_neg - n_zero,
        "min": int(values.min()),
        "max": int(values.max()),
        "mean": float(values.mean())
    }
    sys.stderr.write(render_record("sample", summary, run.seed))
    return EXIT_OK


def cmd_fit(run: RunConfig) -> int:
    if run.data is None:
        raise ParameterError("fit requires --data")
    data = DataFile(run.data).read()
    result = fit(data, run.method or FitMethod.MLE, run.optimizer_config())
    _emit(run, render_record("fit", result.to_dict(), run.seed))

    if run.diagnostic is not None:
        line = result.diagnostic or diagnostic_line(data)
        write_csv(line.to_frame(), run.diagnostic, run.seed)
    return EXIT_OK


def cmd_gof(run: RunConfig) -> int:
    """KS test at given (alpha, p) or at a fitted point"""
    if run.data is None:
        raise ParameterError("gof requires --data")
    if run.alpha is not None and run.p is not None:
        params = run.params()
        data = DataFile(run.data).read()
    elif run.method is not None:
        data = DataFile(run.data).read()
        params = fit(data, run.method, run.optimizer_config()).params
    else:
        raise ParameterError("gof requires either --alpha and --p, or --fit METHOD")

    report = ks_test(data, params)
    _emit(run, render_record("gof", report.to_dict(), run.seed))
    if run.curve is not None:
        write_csv(report.abs_diff_frame(), run.curve, run.seed)
    return EXIT_OK


def cmd_simulate(run: RunConfig) -> int:
    """Monte Carlo table for one cell or the full default grid"""
    reps = run.reps or 1000
    if run.full_grid:
        cells = default_grid(replications=reps, seed=run.seed)
    else:
        if run.k is None:
            raise ParameterError("simulate requires --k unless --full-grid is given")
        cells = [SimCell(run.params(), run.k, reps, run.seed)]

    started = time.perf_counter()
    reports = run_grid(cells, run.optimizer_config(), run.workers, run.log)
    elapsed = time.perf_counter() - started

    write_csv(simulation_table(reports), run.output, run.seed)
    sys.stderr.write(render_record(
        "simulate",
        {"cells": len(reports), "n_failed": sum(r.n_failed for r in reports), "wall_time_s": elapsed},
        run.seed
    ))
    return EXIT_OK


def cmd_grid(run: RunConfig) -> int:
    """Mean and variance over an (alpha, p) grid as CSV"""
    alphas = list(GRID_ALPHAS) if run.alphas is None else run.alphas
    ps = list(GRID_PS) if run.ps is None else run.ps
    for alpha in alphas:
        if alpha <= 0:
            raise ParameterError(f"alpha must be > 0 (got {alpha})")
    for p in ps:
        if not 0 < p < 1:
            raise ParameterError(f"p must be in (0, 1) (got {p})")
    write_csv(moment_grid(alphas, ps, run.eps_tail), run.output, run.seed)
    return EXIT_OK


def cmd_describe(run: RunConfig) -> int:
    """Moment summary, proportions, mode and quartiles"""
    params = run.params()
    summary = moment_summary(params, run.eps_tail)
    neg, zero, pos = proportions(params)
    record = {
        "alpha": params.alpha,
        "p": params.p,
        "mu": params.mu,
        "sigma": params.sigma,
        **summary.to_dict(),
        "prop_neg": neg,
        "prop_zero": zero,
        "prop_pos": pos,
        "q1": quantile(params, 0.25),
        "median": quantile(params, 0.5),
        "q3": quantile(params, 0.75)
    }
    _emit(run, render_record("describe", record, run.seed))
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "sample": cmd_sample,
    "fit": cmd_fit,
    "gof": cmd_gof,
    "simulate": cmd_simulate,
    "grid": cmd_grid,
    "describe": cmd_describe,
}
