"""Tests for the core helpers, configuration and logging."""
