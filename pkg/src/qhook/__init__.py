"""Exact verification of hook length formulas for d-complete posets."""

__version__ = "0.1.0"
