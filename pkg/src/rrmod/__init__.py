"""Exact and arbitrary-precision computations around products of the Rogers-Ramanujan continued fraction."""

__version__ = "0.1.0"
