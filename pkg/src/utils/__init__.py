"""Utility helpers for shared infrastructure."""

from src.utils.logger import configure_logging, get_logger, set_level

__all__ = ["configure_logging", "get_logger", "set_level"]
