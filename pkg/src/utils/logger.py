"""Shared logging utilities for the library and the command-line front end."""

from __future__ import annotations

import atexit
import logging
import logging.handlers
import os
import queue
import sys
from typing import Optional, TextIO

_state: dict = {"configured": False, "queue_listener": None}

LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"


def configure_logging(level: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """Configure root logging once for the process.

    Records go through a `QueueHandler` and are written by a background
    `QueueListener`. Output goes to stderr by default; stdout carries the
    CLI reports.
    """
    if _state["configured"]:
        return
    log_level = (level or os.getenv("LOG_LEVEL", "INFO")).upper()

    console = logging.StreamHandler(stream or sys.stderr)
    console.setFormatter(logging.Formatter(LOG_FORMAT))
    console.setLevel(log_level)

    q: queue.Queue = queue.Queue(-1)
    root = logging.getLogger()
    root.setLevel(log_level)
    root.addHandler(logging.handlers.QueueHandler(q))

    listener = logging.handlers.QueueListener(q, console)
    listener.start()
    atexit.register(listener.stop)
    _state["queue_listener"] = listener
    _state["configured"] = True


def set_level(level: str) -> None:
    """Change the root level after configuration (used by ``--verbose``)."""
    configure_logging(level)
    logging.getLogger().setLevel(level.upper())
    listener = _state["queue_listener"]
    if listener is not None:
        for handler in listener.handlers:
            handler.setLevel(level.upper())


def get_logger(name: str) -> logging.Logger:
    """Return a logger configured with repository defaults."""
    configure_logging()
    return logging.getLogger(name)
