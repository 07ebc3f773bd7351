"""Exact resultant-knot statistics for free knot diagrams."""

__version__ = "0.1.0"
