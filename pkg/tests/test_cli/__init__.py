"""Command line tests package."""
