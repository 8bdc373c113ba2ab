"""Logging helper functions."""
from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
import logging
import sys
import time

_LOGGER = logging.getLogger(__package__)
LOG_LEVEL = logging.WARNING
LOG_VERBOSE = 5
LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
LOG_COLORS = {
    "VERBOSE": "blue",
    "DEBUG": "cyan",
    "INFO": "green",
    "WARNING": "yellow",
    "ERROR": "red",
    "CRITICAL": "red",
}


class _StderrHandler(logging.StreamHandler):
    """Stream handler bound to whatever sys.stderr currently is."""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        """Return the current standard error."""
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def level_for_verbosity(count: int) -> int:
    """Map the number of -v flags to a level: WARNING, DEBUG, then VERBOSE."""
    if count <= 0:
        return LOG_LEVEL
    if count == 1:
        return logging.DEBUG
    return LOG_VERBOSE


def _formatter(log_no_color: bool) -> logging.Formatter:
    """Return a colorlog formatter, or a plain one without colorlog."""
    if not log_no_color:
        try:
            # pylint: disable=import-outside-toplevel
            from colorlog import ColoredFormatter

            return ColoredFormatter(
                f"%(log_color)s{LOG_FORMAT}%(reset)s",
                datefmt=LOG_DATE_FORMAT,
                reset=True,
                log_colors=LOG_COLORS,
            )
        except ImportError:
            pass
    return logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT)


def enable_logging(
    level=LOG_LEVEL,
    add_null_handler: bool = False,
    log_no_color: bool = False,
) -> None:
    """
    Send package logs to standard error at level.

    Standard output stays reserved for results. Calling this again only
    changes the level.
    """
    logging.addLevelName(LOG_VERBOSE, "VERBOSE")
    _LOGGER.setLevel(level)
    if add_null_handler:
        _LOGGER.addHandler(logging.NullHandler())
        return
    if any(isinstance(handler, _StderrHandler) for handler in _LOGGER.handlers):
        return

    handler = _StderrHandler()
    handler.setFormatter(_formatter(log_no_color))
    _LOGGER.addHandler(handler)
    _LOGGER.propagate = False


@contextmanager
def log_duration(step: str, *args) -> Iterator[None]:
    """Log at DEBUG how long the enclosed step took."""
    start = time.perf_counter()
    try:
        yield
    finally:
        _LOGGER.debug("%s took %.3fs", step % args, time.perf_counter() - start)
