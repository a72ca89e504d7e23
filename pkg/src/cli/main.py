# src/cli/main.py
import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from src import __version__
from src.config import config, setup_logging
from src.constants import EXIT_IO, EXIT_METHOD, EXIT_VALIDATION
from src.exceptions import (
    DataError,
    DataFileError,
    InconsistentEstimateError,
    MethodInapplicableError,
    ParameterError,
)
from src.estimation.models import FitMethod
from src.cli.commands import COMMANDS
from src.cli.schemas import RunConfig
from src.cli.validators import float_list, int_list

logger = logging.getLogger(__name__)

METHODS = [m.value for m in FitMethod]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=config.SEED, help="random seed (stamped into every output)")
    common.add_argument("--output", type=Path, default=None, help="output file (default: standard output)")
    common.add_argument("--eps-tail", dest="eps_tail", type=float, default=config.EPS_TAIL,
                        help="tail mass allowed outside truncated sums")
    common.add_argument("--log-level", dest="log_level", default=None, help="logging level (default from DGUD_LOG_LEVEL)")

    params = argparse.ArgumentParser(add_help=False)
    params.add_argument("--alpha", type=float, help="location-like parameter, > 0")
    params.add_argument("--p", type=float, help="scale-like parameter in (0, 1)")

    optim = argparse.ArgumentParser(add_help=False)
    optim.add_argument("--max-iter", dest="max_iter", type=int, default=None)
    optim.add_argument("--xatol", type=float, default=None)

    parser = argparse.ArgumentParser(prog="dgud", description="Discrete Gumbel distribution toolkit")
    parser.add_argument("--version", action="version", version=f"dgud {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common, params], help="evaluate pmf, cdf, survival and hazard")
    p_eval.add_argument("--y", type=int_list, default=None, help="comma-separated integers")
    p_eval.add_argument("--from", dest="y_from", type=int)
    p_eval.add_argument("--to", dest="y_to", type=int)

    p_sample = sub.add_parser("sample", parents=[common, params], help="draw a seeded sample")
    p_sample.add_argument("--n", type=int, required=True)

    p_fit = sub.add_parser("fit", parents=[common, optim], help="fit (alpha, p) to a data file")
    p_fit.add_argument("--data", type=Path, required=True)
    p_fit.add_argument("--method", choices=METHODS, default="mle")
    p_fit.add_argument("--diagnostic", type=Path, help="write the survival diagnostic line as CSV")

    p_gof = sub.add_parser("gof", parents=[common, params, optim], help="Kolmogorov-Smirnov goodness of fit")
    p_gof.add_argument("--data", type=Path, required=True)
    p_gof.add_argument("--fit", dest="method", choices=METHODS, default=None,
                       help="fit with this method instead of using --alpha/--p")
    p_gof.add_argument("--curve", type=Path, help="write the |ecdf - cdf| curve as CSV")

    p_sim = sub.add_parser("simulate", parents=[common, params, optim], help="Monte Carlo study of the MLE")
    p_sim.add_argument("--k", type=int, help="sample size per replication")
    p_sim.add_argument("--reps", type=int, default=1000)
    p_sim.add_argument("--full-grid", dest="full_grid", action="store_true")
    p_sim.add_argument("--workers", type=int, default=config.WORKERS)
    p_sim.add_argument("--log", type=Path, help="JSON-lines replication log")

    p_grid = sub.add_parser("grid", parents=[common], help="mean/variance grid as CSV")
    p_grid.add_argument("--alphas", type=float_list, default=None)
    p_grid.add_argument("--ps", type=float_list, default=None)

    sub.add_parser("describe", parents=[common, params], help="moments, proportions, mode and quartiles")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)

    try:
        run = RunConfig.from_namespace(args)
        return COMMANDS[run.command](run)
    except (ParameterError, DataError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except DataFileError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except (MethodInapplicableError, InconsistentEstimateError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_METHOD


if __name__ == "__main__":
    sys.exit(main())
