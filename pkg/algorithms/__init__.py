"""Numerical differintegration algorithms and their supporting special functions."""
