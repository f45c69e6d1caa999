"""index tests."""
