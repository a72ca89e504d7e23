# src/__init__.py
"""Discrete Gumbel distribution DGUD(alpha, p) toolkit"""

__version__ = "0.1.0"
