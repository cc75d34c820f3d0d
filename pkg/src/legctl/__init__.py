"""Exact invariants of Legendrian knots in contact surgery diagrams."""

__version__ = "0.1.0"
