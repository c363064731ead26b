# utils/logging_utils.py
import logging
import sys

from utils.constants import LOG_FORMAT


def configure_logging(level: str | int = "WARNING") -> None:
    """Install a single stderr handler on the root logger.

    stdout is reserved for command output, so nothing here writes to it.
    Calling this twice replaces the handler instead of stacking a second one.
    """
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_blowzeta", False):
            root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._blowzeta = True  # type: ignore[attr-defined]
    root.addHandler(handler)
    root.setLevel(level.upper() if isinstance(level, str) else level)
