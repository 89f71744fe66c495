"""Exact lattice and GIT-stability toolkit for genus three curves and K3 surfaces."""

__version__ = "0.1.0"
