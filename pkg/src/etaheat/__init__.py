"""Eta- and zeta-function heat-trace coefficients for Dirac-type operators
with spectral boundary conditions, checked against the ball spectrum."""

__version__ = "0.1.0"
