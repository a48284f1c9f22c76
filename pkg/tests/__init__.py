"""Tests for braided-homology."""
