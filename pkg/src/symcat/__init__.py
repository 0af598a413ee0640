"""Exact catalog of compact irreducible symmetric spaces: Poincare polynomials and curvature spectra."""

__version__ = "0.1.0"
