"""Utility modules for braided-homology."""

from .config import Config, get_config, set_config, setting
from .logging import configure_logging, get_logger

__all__ = [
    "Config",
    "get_config",
    "set_config",
    "setting",
    "configure_logging",
    "get_logger",
]
