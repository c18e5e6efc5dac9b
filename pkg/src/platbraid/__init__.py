"""Plat presentations of links in handlebodies: mixed braids, Hilden moves, invariants."""

__version__ = "0.1.0"
