"""Test suite for monodromy-atlas."""
