"""Test suite for spatial-dom."""
