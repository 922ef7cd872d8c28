"""Test package for fraccalc."""
