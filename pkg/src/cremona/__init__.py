"""Exact computations with plane birational maps."""

__version__ = "0.1.0"
