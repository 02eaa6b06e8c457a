"""Exact topology and singularity analysis of rational parametric curves."""

__version__ = "0.1.0"
