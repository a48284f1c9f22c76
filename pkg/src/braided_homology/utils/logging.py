"""Structured logging setup."""

import logging
import sys
from typing import Any, Optional

import structlog

_configured = False


def _stderr_logger(*args: Any) -> structlog.PrintLogger:
    # stderr is resolved per call; callers may swap the stream after configuration
    return structlog.PrintLogger(sys.stderr)


def configure_logging(level: Optional[str] = None, fmt: Optional[str] = None) -> None:
    """Configure structlog for the process.

    Args:
        level: Level name (DEBUG, INFO, WARNING, ...); defaults to config
        fmt: "console" or "json"; defaults to config
    """
    global _configured
    from .config import get_config

    config = get_config()
    level = (level or config.get("logging.level", "WARNING")).upper()
    fmt = fmt or config.get("logging.format", "console")

    renderer: Any
    if fmt == "json":
        renderer = structlog.processors.JSONRenderer(sort_keys=True)
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=False)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(
            getattr(logging, level, logging.WARNING)
        ),
        logger_factory=_stderr_logger,
        cache_logger_on_first_use=False,
    )
    _configured = True


def get_logger(name: str) -> Any:
    """Return a lazy structlog logger carrying the module name.

    The proxy re-reads the configuration on every call, so loggers created at
    import time follow a later ``configure_logging``.
    """
    if not _configured:
        configure_logging()
    return structlog.get_logger(name, module=name)
