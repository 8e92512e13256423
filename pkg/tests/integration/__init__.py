"""Integration tests - Tests that verify component interactions."""
