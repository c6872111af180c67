"""Exact verification of polarized determinant inequalities for Littlewood polynomials."""

__version__ = "0.1.0"
