"""Core infrastructure for braided-homology."""

from .budget import SearchBudget
from .matrix import IntMatrix
from . import errors

__all__ = ["SearchBudget", "IntMatrix", "errors"]
