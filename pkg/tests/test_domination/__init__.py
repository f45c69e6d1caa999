"""domination tests."""
