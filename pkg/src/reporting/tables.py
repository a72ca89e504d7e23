# src/reporting/tables.py
"""CSV writers for grids, curves and the simulation table"""
from pathlib import Path
from typing import Optional, Sequence, TextIO

import pandas as pd

from src.constants import FLOAT_FORMAT
from src.reporting.render import open_output, render_header
from src.simulation.models import SimReport


def simulation_table(reports: Sequence[SimReport]) -> pd.DataFrame:
    return pd.DataFrame([report.to_row() for report in reports])


def write_frame(frame: pd.DataFrame, stream: TextIO) -> None:
    frame.to_csv(stream, index=False, float_format=FLOAT_FORMAT, lineterminator="\n", na_rep="nan")


def write_csv(frame: pd.DataFrame, path: Optional[Path], seed: Optional[int] = None) -> None:
    """Header comment line, then the frame as comma-delimited text"""
    with open_output(path) as stream:
        stream.write(render_header(seed))
        write_frame(frame, stream)
