"""Exact Sylow branching coefficients of symmetric groups via labelled p-ary trees."""

__version__ = "0.1.0"
