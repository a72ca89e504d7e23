# src/reporting/render.py
import logging
import math
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, Optional, TextIO

from jinja2 import Environment, FileSystemLoader

from src import __version__
from src.constants import FLOAT_FORMAT
from src.exceptions import DataFileError

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).parent / "templates"


def format_number(value: Any) -> str:
    """Locale-independent rendering with 10 significant digits"""
    if value is None:
        return "NA"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return FLOAT_FORMAT % value if math.isfinite(value) else str(value)
    if hasattr(value, "item"):
        return format_number(value.item())
    return str(value)


jinja_env = Environment(loader=FileSystemLoader(TEMPLATE_DIR), keep_trailing_newline=True)
jinja_env.filters['num'] = format_number


def render_header(seed: Optional[int]) -> str:
    return jinja_env.get_template("header.txt.j2").render(version=__version__, seed=seed)


def render_record(title: str, record: dict[str, Any], seed: Optional[int] = None) -> str:
    """Flat key=value record preceded by the version/seed header"""
    return jinja_env.get_template("record.txt.j2").render(
        version=__version__, seed=seed, title=title, record=record
    )


@contextmanager
def open_output(path: Optional[Path]) -> Iterator[TextIO]:
    """Text stream for path, or standard output when path is None"""
    if path is None:
        yield sys.stdout
        return
    try:
        f = open(path, "w", newline="\n")
    except OSError as e:
        raise DataFileError(f"cannot write {path}: {e}")
    with f:
        yield f
    logger.info(f"💾 Wrote {path}")
