"""Exact symbolic algebra for the kappa-Poincare group, its kappa-Minkowski
quantum space and their bicovariant differential calculi."""

__version__ = "0.1.0"
