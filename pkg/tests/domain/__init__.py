"""Tests for domain layer."""
