"""Equivariant vector bundles over cohomogeneity-one manifolds."""

__version__ = "0.1.0"
