"""Unique saturation of diamonds and books: exact counters, SRG checks and small-graph search."""

__version__ = "0.1.0"
