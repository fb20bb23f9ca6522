"""
permeq/log.py

structlog setup for the command-line entry point.

Library modules only call ``structlog.get_logger(__name__)``; the CLI calls
configure_logging() once so that log lines go to stderr and stdout stays
reserved for reports.
"""
from __future__ import annotations

import logging
import sys

import structlog


def configure_logging(level: str = "WARNING", *, json: bool = False) -> None:
    """Configure structlog to render to stderr at *level*.

    Args:
        level: Standard level name (DEBUG, INFO, WARNING, ...).
        json:  Render JSON lines instead of the console format.
    """
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level '{level}'.")

    renderer: structlog.types.Processor = (
        structlog.processors.JSONRenderer()
        if json
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso", utc=True),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
