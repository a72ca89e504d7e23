# src/cli/validators.py
"""Input validation for command-line arguments"""
import argparse
import math

from src.constants import MAX_EPS_TAIL, SEED_LIMIT


def validate_alpha(alpha: float) -> bool:
    """alpha must be finite and strictly positive"""
    return math.isfinite(alpha) and alpha > 0


def validate_p(p: float) -> bool:
    """p must lie strictly inside (0, 1)"""
    return math.isfinite(p) and 0 < p < 1


def validate_count(n: int, minimum: int = 1) -> bool:
    return n >= minimum


def validate_eps_tail(eps_tail: float) -> bool:
    return 0 < eps_tail < MAX_EPS_TAIL


def validate_seed(seed: int) -> bool:
    return 0 <= seed < SEED_LIMIT


def validate_workers(workers: int) -> bool:
    return 1 <= workers <= 256


def float_list(text: str) -> list[float]:
    """argparse type for comma-separated reals; the empty string gives []"""
    items = [item.strip() for item in text.split(",") if item.strip()]
    try:
        return [float(item) for item in items]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers (got {text!r})")


def int_list(text: str) -> list[int]:
    """argparse type for comma-separated integers"""
    items = [item.strip() for item in text.split(",") if item.strip()]
    try:
        return [int(item) for item in items]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers (got {text!r})")
