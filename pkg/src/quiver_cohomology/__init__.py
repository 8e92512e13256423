"""Quiver Cohomology - exact Hochschild cohomology of the double-arrow cyclic algebras."""

__version__ = "0.1.0"
