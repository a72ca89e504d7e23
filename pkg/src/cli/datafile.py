# src/cli/datafile.py
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from src.exceptions import DataError, DataFileError
from src.estimation.models import Sample
from src.reporting.render import open_output, render_header

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DataFile:
    """One integer per line, '#' comments allowed, optional 'y' header"""
    path: Optional[Path]

    def read(self) -> Sample:
        try:
            frame = pd.read_csv(self.path, comment="#", header=None, dtype=str, skip_blank_lines=True)
        except pd.errors.EmptyDataError:
            raise DataError(f"data file {self.path} is empty")
        except (OSError, UnicodeDecodeError) as e:
            raise DataFileError(f"cannot read data file {self.path}: {e}")
        except pd.errors.ParserError as e:
            raise DataError(f"cannot parse data file {self.path}: {e}")

        if frame.shape[1] != 1:
            raise DataError(f"data file {self.path} must have a single column (got {frame.shape[1]})")
        column = frame.iloc[:, 0].str.strip()
        if column.size and column.iloc[0].lower() == "y":
            column = column.iloc[1:]
        if column.size == 0:
            raise DataError(f"data file {self.path} contains no observations")

        values = pd.to_numeric(column, errors="coerce")
        bad = values.isna() | ~np.isfinite(values.to_numpy(dtype=float))
        if bad.any():
            first = column[bad].iloc[0]
            raise DataError(f"data file {self.path}: {first!r} is not a number")

        values = values.to_numpy(dtype=float)
        floored = np.floor(values)
        if np.any(floored != values):
            logger.warning(f"⚠️  {np.count_nonzero(floored != values)} real values in {self.path} floored to integers")
        return Sample(floored.astype(np.int64))

    def write(self, values: np.ndarray, seed: Optional[int] = None) -> None:
        with open_output(self.path) as stream:
            stream.write(render_header(seed))
            stream.writelines(f"{int(v)}\n" for v in values)
