# src/config.py
import os
import logging
from dotenv import load_dotenv

load_dotenv()

class Config:
    """Application configuration"""
    LOG_LEVEL: str = os.getenv("DGUD_LOG_LEVEL", "INFO")
    LOG_FILE: str | None = os.getenv("DGUD_LOG_FILE")
    EPS_TAIL: float = float(os.getenv("DGUD_EPS_TAIL", "1e-12"))
    SEED: int = int(os.getenv("DGUD_SEED", "0"))
    WORKERS: int = int(os.getenv("DGUD_WORKERS", "1"))
    MAX_ITER: int = int(os.getenv("DGUD_MAX_ITER", "2000"))
    XATOL: float = float(os.getenv("DGUD_XATOL", "1e-8"))

    # Case-study datasets are not redistributed; point these at local copies
    FLOOD_DATA: str | None = os.getenv("DGUD_FLOOD_DATA")
    TROPICAL_WIND_DATA: str | None = os.getenv("DGUD_TROPICAL_WIND_DATA")
    NON_TROPICAL_WIND_DATA: str | None = os.getenv("DGUD_NON_TROPICAL_WIND_DATA")

config = Config()

def setup_logging(level: str | None = None) -> None:
    """Setup application logging"""
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    if config.LOG_FILE:
        handlers.append(logging.FileHandler(config.LOG_FILE))

    logging.basicConfig(
        level=getattr(logging, (level or config.LOG_LEVEL).upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True
    )
