"""Braided Homology - exact homology of finite braided sets and cycle sets."""

__version__ = "0.1.0"
