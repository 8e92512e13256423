"""quiver-cohomology test suite."""
